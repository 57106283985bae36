#include "ncs/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace ncs {

BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

BigCount ball_volume(unsigned n, unsigned r) {
  if (r >= n) return BigCount(1) << n;
  BigCount sum = 1;
  BigCount term = 1;  // C(n, i), starting at i = 0
  for (unsigned i = 1; i <= r; ++i) {
    term *= n - i + 1;
    term /= i;
    sum += term;
  }
  return sum;
}

double log2_big(const BigCount& v) {
  if (v <= 0) throw std::invalid_argument("log2_big: nonpositive value");
  unsigned bits = boost::multiprecision::msb(v);  // floor(log2 v)
  if (bits < 63) return std::log2(v.convert_to<double>());
  // keep the top 63 bits as an exact mantissa
  BigCount top = v >> (bits - 62);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 62);
}

double log2_rational(const Rational& q) {
  return log2_big(boost::multiprecision::numerator(q)) -
         log2_big(boost::multiprecision::denominator(q));
}

SeqPoint seq_point(unsigned eps, unsigned mu) {
  if (eps < 1 || mu < 1) throw std::invalid_argument("seq_point: eps, mu >= 1");
  SeqPoint p;
  p.eps = eps;
  p.mu = mu;
  p.s_mu = ball_volume(mu, eps);
  p.log2_a = log2_big(p.s_mu) - static_cast<double>(mu) / 2.0;
  return p;
}

Ordering ratio_compare(unsigned eps, unsigned mu) {
  if (eps < 1 || mu < 1)
    throw std::invalid_argument("ratio_compare: eps, mu >= 1");
  BigCount s = ball_volume(mu, eps);
  BigCount s_next = ball_volume(mu + 1, eps);
  BigCount lhs = s_next * s_next;
  BigCount rhs = 2 * s * s;
  if (lhs == rhs)
    throw std::logic_error("ratio_compare: impossible equality, arithmetic bug");
  return lhs > rhs ? Ordering::Rising : Ordering::Falling;
}

ModeResult optimal_mu_exact(unsigned eps) {
  if (eps < 1) throw std::invalid_argument("optimal_mu_exact: eps >= 1");
  // Upward scan from mu = 1; unimodality makes the first Falling index the
  // mode. Terminates below (2 + sqrt(2)) * eps + 2.
  ModeResult res;
  res.eps = eps;
  res.approx = optimal_mu_approx(eps);
  unsigned mu = 1;
  while (ratio_compare(eps, mu) == Ordering::Rising) ++mu;
  res.mode = mu;
  return res;
}

unsigned optimal_mu_approx(unsigned eps) {
  if (eps < 1) throw std::invalid_argument("optimal_mu_approx: eps >= 1");
  if (eps == 1) return 0;
  // ceil((2 + sqrt(2)) (eps-1)) = 2(eps-1) + floor(sqrt(2 (eps-1)^2)) + 1,
  // exact because 2 (eps-1)^2 is never a perfect square for eps > 1.
  BigCount d = eps - 1;
  BigCount sq = 2 * d * d;
  BigCount root = boost::multiprecision::sqrt(sq);
  return static_cast<unsigned>(2 * d + root + 1);
}

Rational asym_two_term_exact(unsigned eps, unsigned mu) {
  if (mu <= 2 * eps)
    throw std::invalid_argument("asym_two_term: requires mu > 2*eps");
  BigCount g = mu - 2 * eps;
  BigCount num = (BigCount(mu) - eps) * (g * g - 2 * eps);
  return Rational(binomial(mu, eps) * num, g * g * g);
}

double asym_two_term(unsigned eps, unsigned mu) {
  return log2_rational(asym_two_term_exact(eps, mu));
}

}  // namespace ncs
