#pragma once

#include <vector>

#include "sparsecc/model.hpp"
#include "sparsecc/rational.hpp"

// Leading-order component-profile probabilities for random graphs and
// multigraphs with about n/2 edges.
namespace sparsecc::probability {

// r[i] = number of components of excess i + 1.
struct ComponentProfile {
  std::vector<int> r;
  // r_1 + 2 r_2 + ... + q r_q
  int weighted_total() const;
};

// Forbid every graph of excess k contractible to a graph H with c(H) = cH.
struct Deduction {
  int k = 1;
  Rational cH;
};

// value = exact * sqrt(2/3) * exp(-polygon_sum)
struct ProfileProbability {
  Rational exact;        // (4/3)^r prod_k b_k^{r_k}/r_k! * r!/(2r)!
  Rational polygon_sum;  // sum_{p in theta} 1/(2p)
  double value = 0;
};

ProfileProbability profile_probability(const ComponentProfile& profile,
                                       const std::vector<int>& theta = {},
                                       const std::vector<Deduction>& deductions = {});

// All components of excess <= max_excess (0 or 1) and free of the polygons.
double low_complexity_probability(int max_excess, const std::vector<int>& theta = {});

// Probability weight that turns [w^m z^n] F into a probability:
//   graph:      n! / C(C(n,2), m)
//   multigraph: 2^m m! n! / n^(2m)
Rational coefficient_weight(Model model, int n, long m);
double coeff_to_probability(Model model, int n, long m, const Rational& coeff);

// round((n/2)(1 + mu n^(-1/3))), requiring |mu| <= n^(1/12).
long edge_count(long n, double mu);

// ln C(C(n,2), m) - ln(n^(2m) / (2^m m!)) + m/n + m^2/n^2, from exact integers.
double binomial_ratio_gap(int n, long m);

}  // namespace sparsecc::probability
