#include "sparsecc/series.hpp"

#include <algorithm>
#include <utility>

#include "sparsecc/errors.hpp"

namespace sparsecc {

Series::Series(int order) {
  if (order < 0) throw invalid_input("series order must be >= 0");
  coeffs_.assign(order + 1, Rational(0));
}

Series::Series(int order, std::vector<Rational> coeffs) : Series(order) {
  const std::size_t keep = std::min(coeffs.size(), coeffs_.size());
  std::move(coeffs.begin(), coeffs.begin() + keep, coeffs_.begin());
}

Series Series::constant(int order, const Rational& c) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(int order, int power, const Rational& c) {
  Series s(order);
  if (power >= 0 && power <= order) s.coeffs_[power] = c;
  return s;
}

Rational Series::labelled_count(int n) const {
  return Rational(coeffs_.at(n) * factorial(n));
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

Series Series::truncated(int order) const {
  return Series(order, coeffs_);
}

Series& Series::operator+=(const Series& other) {
  if (other.order() < order()) coeffs_.resize(other.order() + 1);
  for (int n = 0; n <= order(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  if (other.order() < order()) coeffs_.resize(other.order() + 1);
  for (int n = 0; n <= order(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

Series& Series::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series operator*(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  Series r(order);
  Rational term;
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(term.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      r.coeffs_[i + j] += term;
    }
  }
  return r;
}

Series inverse(const Series& a) {
  if (a[0] == 0) throw invalid_input("inverse of a series with zero constant term");
  const int order = a.order();
  Series r(order);
  const Rational inv0 = 1 / a[0];
  r[0] = inv0;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k)
      if (a[k] != 0) acc += a[k] * r[n - k];
    r[n] = -acc * inv0;
  }
  return r;
}

Series pow(const Series& a, long e) {
  if (e < 0) return pow(inverse(a), -e);
  Series result = Series::constant(a.order(), 1);
  Series base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Series log(const Series& a) {
  if (a[0] != 1) throw invalid_input("log of a series whose constant term is not 1");
  // n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}
  const int order = a.order();
  Series b(order);
  for (int n = 1; n <= order; ++n) {
    Rational acc = Rational(n) * a[n];
    for (int k = 1; k < n; ++k)
      if (b[k] != 0 && a[n - k] != 0) acc -= Rational(k) * b[k] * a[n - k];
    b[n] = acc / n;
  }
  return b;
}

Series exp(const Series& a) {
  if (a[0] != 0) throw invalid_input("exp of a series with nonzero constant term");
  // n e_n = sum_{k=1}^{n} k a_k e_{n-k}
  const int order = a.order();
  Series e(order);
  e[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k)
      if (a[k] != 0) acc += Rational(k) * a[k] * e[n - k];
    e[n] = acc / n;
  }
  return e;
}

Series theta(const Series& a) {
  Series r = a;
  for (int n = 0; n <= r.order(); ++n) r[n] *= n;
  return r;
}

Series cayley_tree_series(int order) {
  Series t(order);
  for (int n = 1; n <= order; ++n) {
    t[n] = Rational(power(Integer(n), n - 1), factorial(n));
    t[n].canonicalize();
  }
  return t;
}

Series x_power_series(long t, int order) {
  Series x = Series::constant(order, 1) - cayley_tree_series(order);
  return pow(x, -t);
}

Integer tree_polynomial(int n, long y) {
  if (n < 0) throw invalid_input("tree_polynomial: n must be >= 0");
  if (n == 0) return 1;
  // Lagrange inversion with T = z e^T:
  // t_n(y) = (n-1)! y sum_{j=0}^{n-1} [(y+1)...(y+j)/j!] n^(n-1-j)/(n-1-j)!
  //        = sum_j  y(y+1)...(y+j)/j! * (n-1)(n-2)...(n-j) * n^(n-1-j)
  Integer total = 0;
  Integer rising = y;   // y(y+1)...(y+j)/j!
  Integer falling = 1;  // (n-1)...(n-j)
  for (int j = 0; j <= n - 1; ++j) {
    if (j > 0) {
      rising *= Integer(y + j);
      mpz_divexact_ui(rising.get_mpz_t(), rising.get_mpz_t(), j);
      falling *= (n - j);
    }
    if (rising == 0) break;
    total += rising * falling * power(Integer(n), n - 1 - j);
  }
  return total;
}

BivariateEGF BivariateEGF::from_excess(const Series& f, int excess) {
  BivariateEGF r(f.order());
  for (int n = 0; n <= f.order(); ++n)
    if (f[n] != 0) r.add(n, n + excess, f[n]);
  return r;
}

Rational BivariateEGF::at(int n, int m) const {
  const auto& row = coeffs_.at(n);
  auto it = row.find(m);
  return it == row.end() ? Rational(0) : it->second;
}

void BivariateEGF::add(int n, int m, const Rational& c) {
  auto& slot = coeffs_.at(n)[m];
  slot += c;
  if (slot == 0) coeffs_.at(n).erase(m);
}

}  // namespace sparsecc
