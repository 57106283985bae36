#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ncs/combinatorics.hpp"
#include "ncs/planner.hpp"

using namespace ncs;

// golden regression values, n in {160, 256, 512}, methods A..E per n
static const double kGolden[8][15] = {
    {79.5, 79.4, 76.3, 81.9, 76.3, 127.5, 127.4, 124.0, 130.4, 124.0, 255.5, 255.4, 251.5, 258.9, 251.5},
    {78.5, 78.5, 73.2, 76.5, 76.3, 126.5, 126.5, 120.5, 124.0, 124.0, 254.5, 254.5, 247.5, 251.5, 251.5},
    {77.5, 77.5, 70.3, 77.5, 73.2, 125.5, 125.5, 117.3, 125.4, 120.5, 253.5, 253.5, 243.8, 253.4, 247.5},
    {76.5, 76.4, 67.7, 74.0, 73.2, 124.5, 124.4, 114.3, 121.0, 120.5, 252.5, 252.4, 240.3, 248.0, 247.5},
    {75.5, 75.2, 65.2, 74.0, 70.3, 123.5, 123.2, 111.5, 121.7, 117.3, 251.5, 251.2, 237.0, 249.1, 243.8},
    {74.5, 74.1, 62.8, 71.5, 70.3, 122.5, 122.1, 108.8, 118.5, 117.3, 250.5, 250.1, 233.8, 245.0, 243.8},
    {73.5, 72.9, 60.6, 71.3, 67.7, 121.5, 120.9, 106.2, 118.5, 114.3, 249.5, 248.9, 230.7, 245.5, 240.3},
    {72.5, 71.7, 58.5, 69.5, 67.7, 120.5, 119.7, 103.7, 116.0, 114.3, 248.5, 247.7, 227.7, 242.0, 240.3}};

TEST_CASE("single estimates") {
  CHECK(cx_plain(160, 4).log2_queries == doctest::Approx(78.0));
  CHECK(cx_plain(160, 0).log2_queries == doctest::Approx(80.0));
  CHECK(cx_plain(256, 6).log2_queries == doctest::Approx(125.0));

  CHECK(cx_A(160, 2).log2_queries == doctest::Approx(78.5));
  CHECK(cx_A(256, 4).log2_queries == doctest::Approx(124.5));
  CHECK(cx_A(512, 6).log2_queries == doctest::Approx(250.5));

  ComplexityEstimate b = cx_B(160, 1);
  CHECK(round1(b.log2_queries) == doctest::Approx(79.4));
  CHECK(b.mu == 2);
  CHECK(round1(cx_B(256, 5).log2_queries) == doctest::Approx(123.2));
  b = cx_B(512, 8);
  CHECK(round1(b.log2_queries) == doctest::Approx(247.7));
  CHECK(b.mu == 25);

  CHECK(round1(cx_C(160, 2).log2_queries) == doctest::Approx(73.2));
  CHECK(round1(cx_C(256, 8).log2_queries) == doctest::Approx(103.7));
  CHECK(round1(cx_C(512, 1).log2_queries) == doctest::Approx(251.5));

  CHECK(round1(cx_D(160, 2).log2_queries) == doctest::Approx(76.5));
  CHECK(round1(cx_D(160, 3).log2_queries) == doctest::Approx(77.5));
  CHECK(round1(cx_D(160, 5).log2_queries) == doctest::Approx(74.0));

  CHECK(round1(cx_E(160, 3).log2_queries) == doctest::Approx(73.2));
  CHECK(round1(cx_E(256, 1).log2_queries) == doctest::Approx(124.0));
  CHECK(round1(cx_E(512, 7).log2_queries) == doctest::Approx(240.3));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(cx_plain(10, 10), std::invalid_argument);
  CHECK_THROWS_AS(cx_A(10, 5), std::invalid_argument);
  CHECK_THROWS_AS(cx_E(10, 5), std::invalid_argument);
}

TEST_CASE("golden regression against the printed table") {
  Table3 t = render_table3({160, 256, 512}, {1, 2, 3, 4, 5, 6, 7, 8});
  for (int row = 0; row < 8; ++row)
    for (int col = 0; col < 15; ++col) {
      double got = round1(t.rows[row].per_n[col / 5][col % 5].log2_queries);
      CHECK(std::abs(got - kGolden[row][col]) <= 0.05);
    }
}

TEST_CASE("table 1 rendering") {
  auto rows = render_table1({1, 2, 3, 4, 8, 9, 10, 98, 99, 100});
  const int mu[] = {2, 5, 8, 11, 25, 28, 32, 332, 335, 339};
  const int mu_star[] = {0, 4, 7, 11, 24, 28, 31, 332, 335, 339};
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].mu == mu[i]);
    CHECK(rows[i].mu_star == mu_star[i]);
  }
}

TEST_CASE("dominance of the 2eps+1 truncation over plain truncation") {
  // equality at eps = 1, strictly better beyond
  for (int n : {64, 160, 256, 512}) {
    CHECK(cx_A(n, 1).log2_queries == doctest::Approx(cx_plain(n, 1).log2_queries));
    for (int eps = 2; 2 * eps + 1 < n; ++eps)
      CHECK(cx_A(n, eps).log2_queries < cx_plain(n, eps).log2_queries);
  }
}

TEST_CASE("B uses the optimal truncation width") {
  const int n = 2048;  // wide enough for every mu in range
  for (int eps = 1; eps <= 100; ++eps) {
    double best = cx_B(n, eps).log2_queries;
    for (unsigned mu = 1; mu <= static_cast<unsigned>(4 * eps + 8); ++mu) {
      double alt = (n + static_cast<double>(mu)) / 2.0 -
                   log2_big(ball_volume(mu, eps));
      CHECK(best <= alt + 1e-9);
    }
  }
}

TEST_CASE("lower bound ordering and monotonicity in eps") {
  for (int n : {160, 256, 512}) {
    // D is monotone only within one eps parity: odd eps pays an extra
    // success-probability term
    double prev[4] = {1e9, 1e9, 1e9, 1e9};
    double prev_d[2] = {1e9, 1e9};
    for (int eps = 1; eps <= 8; ++eps) {
      double a = cx_A(n, eps).log2_queries;
      double b = cx_B(n, eps).log2_queries;
      double c = cx_C(n, eps).log2_queries;
      double d = cx_D(n, eps).log2_queries;
      double e = cx_E(n, eps).log2_queries;
      CHECK(d >= e);
      CHECK(b >= e);
      const double cur[4] = {a, b, c, e};
      for (int i = 0; i < 4; ++i) {
        CHECK(cur[i] <= prev[i] + 1e-9);
        prev[i] = cur[i];
      }
      CHECK(d <= prev_d[eps % 2] + 1e-9);
      prev_d[eps % 2] = d;
    }
  }
}

TEST_CASE("csv shape") {
  Table3 t = render_table3({160, 256, 512}, {1, 2});
  std::string csv = table3_csv(t);
  CHECK(csv.find("eps,A_n160,B_n160,C_n160,D_n160,E_n160,A_n256") == 0);
  CHECK(csv.find("\n1,79.5,79.4,76.3,81.9,76.3,") != std::string::npos);

  std::string t1 = table1_csv(render_table1({1, 4}));
  CHECK(t1 == "eps,mu,mu_star\n1,2,0\n4,11,11\n");
}
