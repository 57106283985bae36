#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ncs {

// Exact nonnegative integer count; all integer paths in this module are
// exact, floating point only appears in base-2 logarithms.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); 0 when k > n.
BigCount binomial(unsigned n, unsigned k);

// Hamming ball volume: sum of C(n, i) for i = 0..r. Equals 2^n for r >= n.
BigCount ball_volume(unsigned n, unsigned r);

// log2 of a positive BigCount, relative error on the mantissa below 2^-40.
double log2_big(const BigCount& v);

double log2_rational(const Rational& q);

struct SeqPoint {
  unsigned eps = 0;
  unsigned mu = 0;
  BigCount s_mu;    // ball volume of radius eps in dimension mu
  double log2_a;    // -mu/2 + log2(s_mu)
};

SeqPoint seq_point(unsigned eps, unsigned mu);

enum class Ordering { Rising, Falling };

// Exact integer sign test deciding whether the weighted ball-volume sequence
// grows or shrinks from mu to mu+1. Equality is impossible (it would force
// an integer multiple of sqrt(2) to be an integer) and throws.
Ordering ratio_compare(unsigned eps, unsigned mu);

struct ModeResult {
  unsigned eps = 0;
  unsigned mode = 0;    // unique maximizer of the sequence
  unsigned approx = 0;  // closed-form approximation
};

// Unique optimal truncation width for a given eps, found by an upward scan.
ModeResult optimal_mu_exact(unsigned eps);

// ceil((2 + sqrt(2)) * (eps - 1)), exact integer arithmetic.
unsigned optimal_mu_approx(unsigned eps);

// Two-term approximation of the ball volume for mu > 2*eps, as log2.
// Throws std::invalid_argument for mu <= 2*eps (pole).
double asym_two_term(unsigned eps, unsigned mu);

// Same approximation as an exact rational, for error analysis.
Rational asym_two_term_exact(unsigned eps, unsigned mu);

}  // namespace ncs
