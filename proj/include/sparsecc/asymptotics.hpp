#pragma once

#include <vector>

#include "sparsecc/rational.hpp"
#include "sparsecc/xexpr.hpp"

// Log-space asymptotic estimates. Every function returning a "log" value
// returns a natural logarithm.
namespace sparsecc::asymptotics {

// h(u) = u - ln u - a ln(1 - u) and its saddle point on (0, 1).
struct SaddleContext {
  double a = 0;
  double u0 = 0;
  double rho = 0;  // u0 (1 + a - 2 u0 + u0^2) / (1 - u0)^2
};

SaddleContext saddle_context(double a);
double h(double a, double u);
double h_prime(double a, double u);
double h_second(double a, double u);

// ln of the saddle-point estimate of t_n(a n + beta), 0 < a < 1.
double tn_saddle(int n, double a, double beta);

// ln of the fixed-y leading term sqrt(2 pi) n^(n - 1/2 + y/2) / (2^(y/2) Gamma(y/2)).
double tn_fixed(int n, double y);

// ln of Wright's estimate of c(n, n+k) with d_k replaced by 1/(2 pi).
double c_asymptotic(int n, int k);

// ln t_n(y), exact up to the final conversion.
double log_tree_polynomial(int n, long y);

// n! [z^n] e for an expression without log term, via exact tree polynomials.
// Suitable for n in the thousands where series evaluation is too slow.
Rational labelled_count(const XExpr& e, int n);

// d_k = b_k / ((3/2)^k (k-1)!), whose limit is 1/(2 pi).
std::vector<double> wright_d(int kmax);

// T near its singularity: z = (1 - delta^2)/e, expansion in delta.
struct SingularRow {
  double delta = 0;
  double t_series = 0;  // partial sums of sum n^(n-1) z^n / n!
  double t_newton = 0;  // root of ln u - u = ln z on (0, 1)
  // scaled[j] = (T - sum_{i<=j} a_i delta^i) / delta^(j+1), a_0..a_3 the
  // expansion coefficients 1, -sqrt2, 2/3, -11 sqrt2/36.
  std::vector<double> scaled;
};

struct SingularReport {
  int terms = 0;
  std::vector<SingularRow> rows;  // delta halving from 1e-2 down to 1e-3
  double second_coefficient = 0;  // (T - 1 + sqrt2 delta)/delta^2 at the smallest delta
  double max_series_newton_gap = 0;
};

// terms in 1..4: how many expansion terms to subtract.
SingularReport singular_expansion_check(int terms);

}  // namespace sparsecc::asymptotics
