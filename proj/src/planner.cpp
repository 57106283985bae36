#include "ncs/planner.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ncs/combinatorics.hpp"

namespace ncs {

const char* method_name(Method m) {
  switch (m) {
    case Method::Plain: return "plain";
    case Method::A: return "A";
    case Method::B: return "B";
    case Method::C: return "C";
    case Method::D: return "D";
    case Method::E: return "E";
  }
  return "?";
}

ComplexityEstimate cx_plain(int n, int eps) {
  if (eps < 0 || eps >= n) throw std::invalid_argument("cx_plain: 0 <= eps < n");
  return {Method::Plain, n, eps, (n - eps) / 2.0};
}

ComplexityEstimate cx_A(int n, int eps) {
  if (eps < 1 || 2 * eps + 1 >= n)
    throw std::invalid_argument("cx_A: need eps >= 1 and 2*eps+1 < n");
  return {Method::A, n, eps, (n + 1) / 2.0 - eps};
}

ComplexityEstimate cx_B(int n, int eps) {
  if (eps < 1) throw std::invalid_argument("cx_B: eps >= 1");
  unsigned mu = optimal_mu_exact(static_cast<unsigned>(eps)).mode;
  if (static_cast<int>(mu) >= n)
    throw std::invalid_argument("cx_B: optimal mu >= n");
  double lq = (n + static_cast<double>(mu)) / 2.0 -
              log2_big(ball_volume(mu, static_cast<unsigned>(eps)));
  ComplexityEstimate e{Method::B, n, eps, lq};
  e.mu = static_cast<int>(mu);
  return e;
}

ComplexityEstimate cx_C(int n, int eps) {
  if (eps < 0 || eps >= n) throw std::invalid_argument("cx_C: 0 <= eps < n");
  double lq = n / 2.0 - 0.5 * log2_big(ball_volume(static_cast<unsigned>(n),
                                                   static_cast<unsigned>(eps)));
  return {Method::C, n, eps, lq};
}

ComplexityEstimate cx_D(int n, int eps) {
  if (eps < 1) throw std::invalid_argument("cx_D: eps >= 1");
  int R = (eps + 1) / 2;
  CoveringCodeSpec spec = CoveringCodeSpec::build(n, R);
  double lq = (n - spec.ell * R - spec.r) / 2.0;
  if (eps % 2 == 1) {
    Rational p = fiber_success_probability(spec, eps);
    lq -= log2_rational(p);
  }
  ComplexityEstimate e{Method::D, n, eps, lq};
  e.code = CodeParams{spec.ell, spec.r, R};
  return e;
}

ComplexityEstimate cx_E(int n, int eps) {
  if (eps < 1 || 2 * eps >= n)
    throw std::invalid_argument("cx_E: need 1 <= eps < n/2");
  unsigned half = static_cast<unsigned>((eps + 1) / 2);
  double lq =
      n / 2.0 - 0.5 * log2_big(ball_volume(static_cast<unsigned>(n), half));
  return {Method::E, n, eps, lq};
}

std::vector<Table1Row> render_table1(const std::vector<int>& eps_list) {
  std::vector<Table1Row> rows;
  for (int eps : eps_list) {
    ModeResult m = optimal_mu_exact(static_cast<unsigned>(eps));
    rows.push_back({eps, static_cast<int>(m.mode), static_cast<int>(m.approx)});
  }
  return rows;
}

Table3 render_table3(const std::vector<int>& n_list,
                     const std::vector<int>& eps_list) {
  Table3 t;
  t.n_list = n_list;
  for (int eps : eps_list) {
    Table3Row row;
    row.eps = eps;
    for (int n : n_list)
      row.per_n.push_back({cx_A(n, eps), cx_B(n, eps), cx_C(n, eps),
                           cx_D(n, eps), cx_E(n, eps)});
    t.rows.push_back(std::move(row));
  }
  return t;
}

double round1(double v) {
  return std::llround(v * 10.0) / 10.0;  // llround is half away from zero
}

namespace {
std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", round1(v));
  return buf;
}
}  // namespace

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "eps,mu,mu_star\n";
  for (const auto& r : rows)
    out << r.eps << ',' << r.mu << ',' << r.mu_star << '\n';
  return out.str();
}

std::string table3_csv(const Table3& t) {
  std::ostringstream out;
  out << "eps";
  for (int n : t.n_list)
    for (const char* m : {"A", "B", "C", "D", "E"}) out << ',' << m << "_n" << n;
  out << '\n';
  for (const auto& row : t.rows) {
    out << row.eps;
    for (const auto& group : row.per_n)
      for (const auto& est : group) out << ',' << fmt1(est.log2_queries);
    out << '\n';
  }
  return out.str();
}

std::string table1_pretty(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "optimal truncation width\n";
  out << "  eps   mu  mu*\n";
  for (const auto& r : rows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%5d %4d %4d\n", r.eps, r.mu, r.mu_star);
    out << buf;
  }
  return out.str();
}

std::string table3_pretty(const Table3& t) {
  std::ostringstream out;
  out << "log2 query complexity by method\n  eps";
  for (int n : t.n_list)
    for (const char* m : {"A", "B", "C", "D", "E"}) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %s@%d", m, n);
      out << buf;
    }
  out << '\n';
  for (const auto& row : t.rows) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%5d", row.eps);
    out << buf;
    for (size_t i = 0; i < row.per_n.size(); ++i)
      for (const auto& est : row.per_n[i]) {
        std::snprintf(buf, sizeof buf, " %*.1f",
                      static_cast<int>(5 + std::to_string(t.n_list[i]).size()),
                      round1(est.log2_queries));
        out << buf;
      }
    out << '\n';
  }
  return out.str();
}

}  // namespace ncs
