#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncs/covering_code.hpp"

namespace ncs {

enum class Method { Plain, A, B, C, D, E };

const char* method_name(Method m);

struct CodeParams {
  int ell = 0;
  int r = 0;
  int R = 0;
};

struct ComplexityEstimate {
  Method method = Method::Plain;
  int n = 0;
  int eps = 0;
  double log2_queries = 0.0;
  std::optional<int> mu;           // method B
  std::optional<CodeParams> code;  // method D
};

// (n - eps) / 2: cycle finding on an eps-bit truncation.
ComplexityEstimate cx_plain(int n, int eps);
// (n + 1) / 2 - eps: truncation of 2*eps + 1 bits.
ComplexityEstimate cx_A(int n, int eps);
// (n + mu)/2 - log2 S_mu(eps) at the unique optimal mu.
ComplexityEstimate cx_B(int n, int eps);
// n/2 - log2(S_n(eps)) / 2: table-based birthday search.
ComplexityEstimate cx_C(int n, int eps);
// Covering-code approach; odd eps repeats the (eps+1)-code and pays the
// reciprocal of the fiber success probability.
ComplexityEstimate cx_D(int n, int eps);
// Lower bound n/2 - log2(S_n(ceil(eps/2))) / 2 for any balanced map.
ComplexityEstimate cx_E(int n, int eps);

struct Table1Row {
  int eps = 0;
  int mu = 0;       // exact optimum
  int mu_star = 0;  // closed-form approximation
};

std::vector<Table1Row> render_table1(const std::vector<int>& eps_list);

struct Table3Row {
  int eps = 0;
  // estimates grouped per n, five methods (A..E) each
  std::vector<std::array<ComplexityEstimate, 5>> per_n;
};

struct Table3 {
  std::vector<int> n_list;
  std::vector<Table3Row> rows;
};

Table3 render_table3(const std::vector<int>& n_list,
                     const std::vector<int>& eps_list);

// One-decimal rounding, half away from zero (table convention).
double round1(double v);

std::string table1_csv(const std::vector<Table1Row>& rows);
std::string table3_csv(const Table3& t);
std::string table1_pretty(const std::vector<Table1Row>& rows);
std::string table3_pretty(const Table3& t);

}  // namespace ncs
