#include "ncs/compressor.hpp"

#include <stdexcept>

namespace ncs {

TruncationSpec TruncationSpec::trailing(int n, int mu) {
  if (mu < 0 || mu > n) throw std::invalid_argument("truncation: 0 <= mu <= n");
  TruncationSpec t;
  t.n = n;
  t.mu = mu;
  for (int i = n - mu; i < n; ++i) t.dropped.push_back(i);
  return t;
}

CompressorSpec::CompressorSpec(TruncationSpec t) : impl_(std::move(t)) {
  const auto& tr = truncation();
  if (static_cast<int>(tr.dropped.size()) != tr.mu)
    throw std::invalid_argument("truncation: position count != mu");
}

CompressorSpec::CompressorSpec(CoveringCodeSpec c) : impl_(std::move(c)) {}

int CompressorSpec::n() const {
  return is_code() ? code().n : truncation().n;
}

int CompressorSpec::k() const {
  return is_code() ? code().k : truncation().n - truncation().mu;
}

Digest CompressorSpec::compress(const Digest& x) const {
  if (x.width() != n())
    throw std::invalid_argument("compress: width mismatch");
  if (is_code()) return code_compress(code(), x);
  const auto& t = truncation();
  Digest out(n() - t.mu);
  int pos = 0;
  size_t drop = 0;
  for (int i = 0; i < t.n; ++i) {
    if (drop < t.dropped.size() && t.dropped[drop] == i) {
      ++drop;
      continue;
    }
    out.set_bit(pos++, x.bit(i));
  }
  return out;
}

Digest CompressorSpec::expand(const Digest& s) const {
  if (s.width() != k())
    throw std::invalid_argument("expand: width mismatch");
  if (is_code()) return code_expand(code(), s);
  const auto& t = truncation();
  Digest out(t.n);
  int pos = 0;
  size_t drop = 0;
  for (int i = 0; i < t.n; ++i) {
    if (drop < t.dropped.size() && t.dropped[drop] == i) {
      ++drop;
      continue;
    }
    out.set_bit(i, s.bit(pos++));
  }
  return out;
}

}  // namespace ncs
