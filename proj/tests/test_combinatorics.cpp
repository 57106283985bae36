#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ncs/combinatorics.hpp"

using namespace ncs;

namespace {

// Pascal-triangle oracle, independent of the multiplicative formula.
BigCount binomial_pascal(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<BigCount> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigCount> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(25, 8) == 1081575);
  CHECK(binomial(3, 5) == 0);
  for (unsigned n = 0; n <= 30; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial_pascal(n, k));
}

TEST_CASE("ball volume") {
  CHECK(ball_volume(5, 2) == 16);
  CHECK(ball_volume(17, 0) == 1);
  CHECK(ball_volume(160, 2) == 12881);
  CHECK(ball_volume(10, 10) == 1024);
  CHECK(ball_volume(10, 12) == 1024);

  // S_n(r) + S_n(n-r-1) = 2^n
  for (unsigned n = 1; n <= 40; ++n)
    for (unsigned r = 0; r < n; ++r)
      CHECK(ball_volume(n, r) + ball_volume(n, n - r - 1) == BigCount(1) << n);
}

TEST_CASE("seq_point") {
  SeqPoint p = seq_point(1, 2);
  CHECK(p.s_mu == 3);
  CHECK(p.log2_a == doctest::Approx(std::log2(3.0) - 1.0).epsilon(1e-10));

  p = seq_point(2, 5);
  CHECK(p.s_mu == 16);
  CHECK(p.log2_a == doctest::Approx(1.5).epsilon(1e-12));

  // full ball when mu <= eps
  for (unsigned eps = 1; eps <= 8; ++eps)
    for (unsigned mu = 1; mu <= eps; ++mu)
      CHECK(seq_point(eps, mu).s_mu == BigCount(1) << mu);
}

TEST_CASE("ratio_compare") {
  CHECK(ratio_compare(1, 1) == Ordering::Rising);
  CHECK(ratio_compare(1, 2) == Ordering::Falling);
  CHECK(ratio_compare(2, 4) == Ordering::Rising);
  CHECK(ratio_compare(2, 5) == Ordering::Falling);
}

TEST_CASE("optimal mu, exact and approximate") {
  CHECK(optimal_mu_exact(3).mode == 8);
  CHECK(optimal_mu_exact(10).mode == 32);
  CHECK(optimal_mu_exact(100).mode == 339);

  CHECK(optimal_mu_approx(1) == 0);
  CHECK(optimal_mu_approx(8) == 24);
  CHECK(optimal_mu_approx(98) == 332);
}

TEST_CASE("mode maximizes the sequence and obeys the bounds") {
  const double sqrt2 = std::sqrt(2.0);
  for (unsigned eps = 1; eps <= 200; ++eps) {
    ModeResult m = optimal_mu_exact(eps);
    CHECK(m.mode > eps);

    double best = -1e300;
    unsigned best_mu = 0;
    for (unsigned mu = 1; mu <= 4 * eps + 8; ++mu) {
      double v = seq_point(eps, mu).log2_a;
      if (v > best) {
        best = v;
        best_mu = mu;
      }
    }
    CHECK(best_mu == m.mode);

    CHECK(static_cast<double>(m.mode) >= (1.0 + sqrt2) * eps - 1.0);
    CHECK(static_cast<double>(m.mode) <= (2.0 + sqrt2) * eps);
    if (eps >= 2) {
      int diff = static_cast<int>(m.mode) - static_cast<int>(m.approx);
      CHECK(std::abs(diff) <= 1);
    }
  }
}

TEST_CASE("strict log-concavity and no plateau, reduced range") {
  // acceptance covers eps <= 64, mu <= 1000; below eps the ball saturates
  // to 2^mu and log-concavity holds with equality
  for (unsigned eps = 1; eps <= 12; ++eps) {
    BigCount prev = ball_volume(1, eps), cur = ball_volume(2, eps);
    for (unsigned mu = 2; mu <= 200; ++mu) {
      BigCount next = ball_volume(mu + 1, eps);
      if (mu >= eps)
        CHECK(cur * cur > prev * next);
      else
        CHECK(cur * cur == prev * next);
      CHECK(next * next != 2 * cur * cur);
      prev = cur;
      cur = next;
    }
  }
}

TEST_CASE("two-term asymptotics") {
  CHECK(asym_two_term(1, 10) ==
        doctest::Approx(std::log2(10.0 * (9.0 / 8.0 - 2.0 * 9.0 / 512.0)))
            .epsilon(1e-10));
  CHECK_THROWS_AS(asym_two_term(5, 10), std::invalid_argument);

  double approx = asym_two_term(10, 34);
  double exact = log2_big(ball_volume(34, 10));
  CHECK(std::abs(std::exp2(approx - exact) - 1.0) < 0.035);
}

TEST_CASE("asymptotic error decays like mu^-2") {
  // alpha = eps/mu fixed at 0.29; relative error times mu^2 stays bounded
  double lo = 1e300, hi = 0.0;
  for (unsigned mu : {50u, 100u, 200u, 400u, 800u}) {
    unsigned eps = static_cast<unsigned>(std::lround(0.29 * mu));
    Rational approx = asym_two_term_exact(eps, mu);
    Rational exact(ball_volume(mu, eps));
    Rational rel = (approx - exact) / exact;
    double scaled = std::abs(rel.convert_to<double>()) * mu * mu;
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  CHECK(hi / lo < 4.0);
}
