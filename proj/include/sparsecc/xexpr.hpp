#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sparsecc/model.hpp"
#include "sparsecc/rational.hpp"
#include "sparsecc/series.hpp"

namespace sparsecc {

// sum_t c_t X^(-t) + L ln(1/X) with X = 1 - T(z), tagged with an excess k so
// that the bivariate form w^k f(wz) can be recovered. Negative t are
// nonnegative powers of X, which is how polynomials in T are stored.
class XExpr {
 public:
  XExpr() = default;
  explicit XExpr(int excess) : excess_(excess) {}

  // c X^(-t)
  static XExpr x_power(long t, const Rational& c = 1, int excess = 0);
  // c ln(1/X)
  static XExpr log_term(const Rational& c, int excess = 0);
  // c T^j
  static XExpr t_power(int j, const Rational& c = 1, int excess = 0);
  // sum_j p[j] T^j
  static XExpr t_polynomial(const std::vector<Rational>& p, int excess = 0);
  // (sum_j p[j] T^j) / X^d
  static XExpr t_rational(const std::vector<Rational>& p, int d, int excess = 0);

  const std::map<long, Rational>& laurent() const { return laurent_; }
  const Rational& log_coeff() const { return log_coeff_; }
  int excess() const { return excess_; }
  XExpr with_excess(int excess) const;

  // coefficient of X^(-t)
  Rational coeff(long t) const;
  bool is_zero() const { return laurent_.empty() && log_coeff_ == 0; }
  bool is_constant() const;
  // Largest / smallest t carrying a nonzero coefficient.
  std::optional<long> top() const;
  std::optional<long> bottom() const;

  // Sum of c_t T^j re-expanded: only valid when every t <= 0.
  std::vector<Rational> to_t_polynomial() const;

  XExpr& operator+=(const XExpr& other);
  XExpr& operator-=(const XExpr& other);
  XExpr& operator*=(const Rational& s);
  friend XExpr operator+(XExpr a, const XExpr& b) { return a += b; }
  friend XExpr operator-(XExpr a, const XExpr& b) { return a -= b; }
  friend XExpr operator*(XExpr a, const Rational& s) { return a *= s; }
  friend XExpr operator*(const Rational& s, XExpr a) { return a *= s; }
  // Excess tags add. Rejects a log term unless the other factor is constant.
  friend XExpr operator*(const XExpr& a, const XExpr& b);
  XExpr operator-() const { return *this * Rational(-1); }

  friend bool operator==(const XExpr& a, const XExpr& b) {
    return a.excess_ == b.excess_ && a.log_coeff_ == b.log_coeff_ &&
           a.laurent_ == b.laurent_;
  }

  void add_term(long t, const Rational& c);

 private:
  void merge(const XExpr& other, int sign);

  std::map<long, Rational> laurent_;
  Rational log_coeff_ = 0;
  int excess_ = 0;
};

std::string to_string(const XExpr& e);

Series xexpr_eval(const XExpr& e, int order);

// z d/dz, acting through T: X^(-t) -> t T X^(-t-2), ln(1/X) -> T X^(-2).
XExpr theta_z(const XExpr& e);

// T d/dT. On a smooth EGF written in the variable z (so X reads as 1 - z)
// this is the smooth-world z d/dz.
XExpr theta_t(const XExpr& e);

// Exact division by T^j; throws if the result would leave the ring.
XExpr divide_by_t(const XExpr& e, int j);

// Delta_k = 2(k + T d/dT): X^(-t) -> 2t X^(-t-1) + 2(k-t) X^(-t).
XExpr delta_apply(int k, const XExpr& e);

// Oracle value n! [z^n] W that the inverse must reproduce.
struct Pin {
  int n;
  Rational value;
};

// Solves delta_apply(k, W) = rhs. Delta_k is injective on the ring, so the
// solve is unique; the pins are checked against the solution and a mismatch
// raises consistency_failure.
XExpr delta_invert(int k, const XExpr& rhs, const std::vector<Pin>& pins);

// Graph:      (theta^2 - 3 theta - 2k) F + 2 (theta W_0) (theta F)
// Multigraph: theta^2 F + 2 (theta W_0) (theta F)
// base_pointed is theta W_0 for the relevant unicyclic family.
XExpr omega_apply(int k, const XExpr& base_pointed, const XExpr& e,
                  Model model = Model::graph);

// sum_{t=1}^{k-1} (theta W_t)(theta W_{k-t}), with ws[i] holding W_{i+1}.
// k = ws.size() + 1.
XExpr lambda_sum(const std::vector<XExpr>& ws);

// Single labelled configuration H: egf = c(H) T^v with excess e(H) - v(H).
struct Configuration {
  XExpr egf;
  bool two_connected = false;
};

struct Composition {
  XExpr egf;
  bool exact = false;  // false: coefficientwise upper bound only
};

// Glue a smooth family F and H at a vertex, or through a path when
// with_path is set. F is given in the smooth variable.
Composition compose_serial(const XExpr& f_smooth, const Configuration& h,
                           bool with_path);

// Glue a smooth family F and H along an edge.
Composition compose_parallel(const XExpr& f_smooth, const Configuration& h);

}  // namespace sparsecc
