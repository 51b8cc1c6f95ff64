#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sparsecc/graph.hpp"
#include "sparsecc/model.hpp"
#include "sparsecc/rational.hpp"
#include "sparsecc/series.hpp"
#include "sparsecc/xexpr.hpp"

namespace sparsecc::census {

// Wright-type constants indexed by excess k = 0..kmax. Index 0 of b holds the
// convention b_0 = 1/2; index 0 of the other sequences is unused (zero).
struct ConstantTable {
  int kmax = 0;
  int r = 0;  // number of forbidden polygons for cprime_xi
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::vector<Rational> cprime;     // triangle-free second coefficient
  std::vector<Rational> cprime_xi;  // r forbidden polygons
  std::vector<Rational> calB;       // sum_{t=1}^{k-1} t(k-t) b_t b_{k-t}
};

// cprime and cprime_xi are each computed by two independent recurrences;
// any disagreement throws consistency_failure.
ConstantTable wright_constants(int kmax, int r = 0);

// Catalogue of exact EGFs. Names:
//   W-1, W0, W0_multi, W0_C3, W0_C3_multi, W0_xi, W0_xi_multi,
//   W1, W1_C3, S1_C3, J1_C3, W2_C3, S2_C3, J2_C3
// The *_xi forms use `polygons`; the others ignore it.
XExpr closed_form(std::string_view name, const std::vector<int>& polygons = {});
std::vector<std::string> closed_form_names();

// Unicyclic EGF of the model with the given polygons forbidden.
XExpr unicyclic(Model model, const std::vector<int>& polygons = {});

// Graphs whose kernel is exactly H: c(H) T^v(H) / X^e(H), excess e(H) - v(H).
// H must be simple with minimum degree 3.
XExpr contractible_family(const Graph& h);

// Ordinary generating functions of partitions of n into exactly `parts`
// parts, all distinct when `distinct` is set.
Series partition_gf(int parts, bool distinct, int order);
// Direct count, independent of partition_gf.
Integer count_partitions(int n, int parts, bool distinct);

// Smooth bicyclic graphs as an OGF in z, assembled from partition GFs.
// Throws consistency_failure unless it equals z^4 (6 - z) / (24 (1 - z)^3).
Series smooth_bicyclic_partition(int order);
// sum_j a_j T(z)^j for an OGF a, truncated at `order`.
Series substitute_tree(const Series& ogf, int order);

// W_1..W_kmax from the Delta/Omega/Lambda recurrence. Every step is checked
// against exact oracle counts at two small vertex counts.
std::vector<XExpr> compute_wk(int kmax, Model model = Model::graph);

// Connected graphs of excess k with the polygons forbidden, plus the
// exactly-one-copy and juxtaposition families needed by the recurrence.
// Uses the catalogue for {3} and k <= 2, the kernel census otherwise.
struct ForbiddenFamily {
  int excess = 0;
  XExpr free;
  std::vector<std::pair<int, XExpr>> single;  // (polygon length, EGF)
  XExpr juxtaposition;
};
ForbiddenFamily forbidden_family(int k, const std::vector<int>& polygons);

// Left minus right side of the first-order recurrence linking excess k and
// k + 1, evaluated to `order`. Zero when the recurrence holds.
Series recurrence_residual(int k, const std::vector<int>& polygons, Model model,
                           int order);

enum class Inequality { wright, sbound, jbound, constants, vanishing };
Inequality parse_inequality(std::string_view name);
std::string to_string(Inequality which);

struct InequalityParams {
  Rational epsilon = rat(1, 2);
  int r = 1;                    // constants: number of polygons
  std::vector<int> polygons{3};  // wright: empty means plain graphs
};

struct InequalityReport {
  Inequality which = Inequality::wright;
  int k = 0;
  int order = 0;
  bool holds = true;
  int checked = 0;                    // coefficients (or indices) compared
  std::optional<int> first_violation;  // n, or k for the constants band
  std::string detail;
  // Smallest epsilon for which the bound holds up to `order`; nullopt when
  // no epsilon works (a coefficient is positive where the bound is zero).
  std::optional<Rational> minimal_epsilon;
};

// wright:    b_k/X^{3k} - c/X^{3k-1} <= W_k <= b_k/X^{3k} coefficientwise, with
//            c = c'_k for triangle-free and c_k for plain graphs.
// sbound:    S_{k+1,C3} <= (3/2 + eps) k b_k / X^{3k+2}
// jbound:    J_{k+1,C3} <= (6 + eps) (k-1) b_{k-1} / X^{3k-1}
// constants: k b_k <= c'^xi_k <= (19+6r)/5 k b_k for 1 <= k <= `k`
// vanishing: n! [z^n] W_k = 0 whenever n < 3/2 + sqrt(2k + 9/4)
InequalityReport inequality_check(Inequality which, int k, int order,
                                  const InequalityParams& params = {});

// Coefficients of X^{-3k} and X^{-3k+1}. Throws on terms above X^{-3k}.
std::pair<Rational, Rational> leading_coefficients(const XExpr& e, int k);

}  // namespace sparsecc::census
