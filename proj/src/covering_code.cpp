#include "ncs/covering_code.hpp"

#include <cstdio>
#include <stdexcept>
#include <unordered_map>

namespace ncs {

CoveringCodeSpec CoveringCodeSpec::build(int n, int R) {
  if (R < 1 || n < 3 * R)
    throw std::invalid_argument("build_code: need R >= 1 and n >= 3R");
  // largest ell with R * (2^ell - 1) <= n, i.e. floor(log2(n/R + 1))
  int ell = 0;
  while (static_cast<long long>(R) * ((1LL << (ell + 1)) - 1) <= n) ++ell;
  if (ell < 2) throw std::invalid_argument("build_code: ell < 2, blocks too short");
  int r = static_cast<int>((n - static_cast<long long>(R) * ((1LL << ell) - 1)) >> ell);

  CoveringCodeSpec spec;
  spec.n = n;
  spec.R = R;
  spec.ell = ell;
  spec.r = r;
  spec.k = n - ell * R - r;
  int offset = 0;
  for (int i = 0; i < R; ++i) {
    int m = i < r ? ell + 1 : ell;
    HammingBlock b{m, (1 << m) - 1, offset};
    offset += b.length;
    spec.blocks.push_back(b);
  }
  spec.leftover = n - offset;
  if (spec.leftover < 0 || spec.k <= 0)
    throw std::invalid_argument("build_code: parameters leave no state bits");
  return spec;
}

std::string CoveringCodeSpec::to_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d:%d:%d:%d", n, R, ell, r);
  return buf;
}

std::optional<CoveringCodeSpec> CoveringCodeSpec::parse(const std::string& text) {
  int n, R, ell, r;
  if (std::sscanf(text.c_str(), "%d:%d:%d:%d", &n, &R, &ell, &r) != 4)
    return std::nullopt;
  try {
    CoveringCodeSpec spec = build(n, R);
    if (spec.ell != ell || spec.r != r) return std::nullopt;
    return spec;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Digest hamming_decode_block(const Digest& x, int m) {
  int length = (1 << m) - 1;
  if (x.width() != length)
    throw std::invalid_argument("hamming_decode_block: bad length");
  int syndrome = 0;
  for (int j = 1; j <= length; ++j)
    if (x.bit(j - 1)) syndrome ^= j;
  Digest out = x;
  if (syndrome != 0) out.set_bit(syndrome - 1, !out.bit(syndrome - 1));
  return out;
}

Digest code_decode(const CoveringCodeSpec& spec, const Digest& x) {
  if (x.width() != spec.n)
    throw std::invalid_argument("code_decode: width mismatch");
  Digest out = x;
  for (const auto& b : spec.blocks) {
    int syndrome = 0;
    for (int j = 1; j <= b.length; ++j)
      if (x.bit(b.offset + j - 1)) syndrome ^= j;
    if (syndrome != 0) {
      int i = b.offset + syndrome - 1;
      out.set_bit(i, !out.bit(i));
    }
  }
  return out;
}

namespace {
bool is_power_of_two(int j) { return (j & (j - 1)) == 0; }
}  // namespace

Digest code_compress(const CoveringCodeSpec& spec, const Digest& x) {
  Digest cw = code_decode(spec, x);
  Digest out(spec.k);
  int pos = 0;
  for (const auto& b : spec.blocks)
    for (int j = 1; j <= b.length; ++j)
      if (!is_power_of_two(j)) out.set_bit(pos++, cw.bit(b.offset + j - 1));
  for (int i = spec.n - spec.leftover; i < spec.n; ++i)
    out.set_bit(pos++, cw.bit(i));
  return out;
}

Digest code_expand(const CoveringCodeSpec& spec, const Digest& s) {
  if (s.width() != spec.k)
    throw std::invalid_argument("code_expand: width mismatch");
  Digest out(spec.n);
  int pos = 0;
  for (const auto& b : spec.blocks) {
    for (int j = 1; j <= b.length; ++j)
      if (!is_power_of_two(j)) out.set_bit(b.offset + j - 1, s.bit(pos++));
    // parity bits chosen so the syndrome vanishes
    for (int t = 0; (1 << t) <= b.length; ++t) {
      int p = 1 << t;
      bool parity = false;
      for (int j = 1; j <= b.length; ++j)
        if (j != p && (j & p)) parity ^= out.bit(b.offset + j - 1);
      out.set_bit(b.offset + p - 1, parity);
    }
  }
  for (int i = spec.n - spec.leftover; i < spec.n; ++i)
    out.set_bit(i, s.bit(pos++));
  return out;
}

BlockDistanceDistribution block_distance_distribution(int m) {
  if (m < 2) throw std::invalid_argument("block_distance_distribution: m >= 2");
  BigCount L = (BigCount(1) << m) - 1;
  BigCount denom = BigCount(1) << (2 * m);
  BlockDistanceDistribution d;
  d.probs[0] = Rational(BigCount(1) << m, denom);
  d.probs[1] = Rational(2 * L, denom);
  d.probs[2] = Rational(L * (L - 1), denom);
  return d;
}

Rational fiber_success_probability(const CoveringCodeSpec& spec, int eps) {
  // convolution of the per-block distance distributions
  std::vector<Rational> acc{Rational(1)};
  for (const auto& b : spec.blocks) {
    BlockDistanceDistribution d = block_distance_distribution(b.m);
    std::vector<Rational> next(acc.size() + 2, Rational(0));
    for (size_t i = 0; i < acc.size(); ++i)
      for (int j = 0; j < 3; ++j) next[i + j] += acc[i] * d.probs[j];
    acc = std::move(next);
  }
  Rational p(0);
  for (size_t i = 0; i < acc.size() && static_cast<int>(i) <= eps; ++i)
    p += acc[i];
  return p;
}

BalanceCheck check_balanced(const std::function<std::uint64_t(std::uint64_t)>& g,
                            int n, std::uint64_t codomain_size) {
  if (n < 1 || n > 24) throw std::invalid_argument("check_balanced: n in [1,24]");
  std::unordered_map<std::uint64_t, std::uint64_t> fibers;
  const std::uint64_t domain = 1ULL << n;
  for (std::uint64_t x = 0; x < domain; ++x) ++fibers[g(x)];
  BalanceCheck res;
  for (const auto& [out, size] : fibers) ++res.histogram[size];
  if (codomain_size == 0) codomain_size = fibers.size();
  if (codomain_size > fibers.size())
    res.histogram[0] = codomain_size - fibers.size();
  res.balanced = res.histogram.size() == 1 &&
                 res.histogram.begin()->first * codomain_size == domain;
  return res;
}

}  // namespace ncs
