#pragma once

#include <map>
#include <vector>

#include "sparsecc/rational.hpp"

namespace sparsecc {

// Truncated power series c_0 + c_1 z + ... + c_N z^N with exact coefficients.
// Used for EGFs (c_n = count/n!) and, where noted, for ordinary GFs.
class Series {
 public:
  Series() : Series(0) {}
  explicit Series(int order);
  Series(int order, std::vector<Rational> coeffs);

  static Series constant(int order, const Rational& c);
  static Series monomial(int order, int power, const Rational& c);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int n) const { return coeffs_.at(n); }
  Rational& operator[](int n) { return coeffs_.at(n); }

  // n! [z^n]
  Rational labelled_count(int n) const;
  bool is_zero() const;
  Series truncated(int order) const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& s);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b);
  Series operator-() const;

  friend bool operator==(const Series& a, const Series& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

// Multiplicative inverse; requires a nonzero constant term.
Series inverse(const Series& a);
// Integer power; a negative exponent goes through inverse().
Series pow(const Series& a, long e);
// Requires constant term 1.
Series log(const Series& a);
// Requires constant term 0.
Series exp(const Series& a);
// z d/dz
Series theta(const Series& a);

// Rooted labelled trees: sum n^(n-1) z^n / n!.
Series cayley_tree_series(int order);

// (1 - T(z))^(-t) for any integer t.
Series x_power_series(long t, int order);

// t_n(y) = n! [z^n] (1 - T)^(-y). Always an integer for integer y.
Integer tree_polynomial(int n, long y);

// Coefficients indexed by vertex count n and edge count m. A family of fixed
// excess k only has entries at m = n + k.
class BivariateEGF {
 public:
  explicit BivariateEGF(int order) : coeffs_(order + 1) {}

  // w^k f(wz)
  static BivariateEGF from_excess(const Series& f, int excess);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational at(int n, int m) const;
  void add(int n, int m, const Rational& c);
  const std::map<int, Rational>& row(int n) const { return coeffs_.at(n); }

 private:
  std::vector<std::map<int, Rational>> coeffs_;
};

}  // namespace sparsecc
