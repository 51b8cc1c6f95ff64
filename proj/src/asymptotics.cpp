#include "sparsecc/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "sparsecc/census.hpp"
#include "sparsecc/errors.hpp"
#include "sparsecc/series.hpp"

namespace sparsecc::asymptotics {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double h(double a, double u) { return u - std::log(u) - a * std::log1p(-u); }

double h_prime(double a, double u) { return 1 - 1 / u + a / (1 - u); }

double h_second(double a, double u) { return 1 / (u * u) + a / ((1 - u) * (1 - u)); }

SaddleContext saddle_context(double a) {
  if (!(a > 0 && a < 1)) throw invalid_input("saddle point needs 0 < a < 1");
  SaddleContext s;
  s.a = a;
  // 1 + a/2 - sqrt(a(1 + a/4)), written to avoid cancellation for small a.
  const double root = std::sqrt(a * (1 + a / 4));
  s.u0 = 1 / (1 + a / 2 + root);
  const double w = 1 - s.u0;
  s.rho = s.u0 * (1 + a - 2 * s.u0 + s.u0 * s.u0) / (w * w);
  return s;
}

double tn_saddle(int n, double a, double beta) {
  if (n < 1) throw invalid_input("tn_saddle: n must be >= 1");
  const SaddleContext s = saddle_context(a);
  if (a * n + beta < 1) throw invalid_input("tn_saddle: a n + beta must be >= 1");
  const double log1mu = std::log1p(-s.u0);
  return std::lgamma(n + 1.0) - std::log(2 * std::sqrt(kPi * n)) + n * s.u0 +
         (1 - beta) * log1mu - n * std::log(s.u0) - a * n * log1mu;
}

double tn_fixed(int n, double y) {
  if (n < 1) throw invalid_input("tn_fixed: n must be >= 1");
  if (!(y > 0)) throw invalid_input("tn_fixed: y must be > 0");
  return 0.5 * std::log(2 * kPi) + (n - 0.5 + y / 2) * std::log(static_cast<double>(n)) -
         (y / 2) * std::log(2.0) - std::lgamma(y / 2);
}

double c_asymptotic(int n, int k) {
  if (n < 1 || k < 1) throw invalid_input("c_asymptotic: n and k must be >= 1");
  const double d = 1 / (2 * kPi);
  return std::log(d) + 0.5 * std::log(3 * kPi) + (k / 2.0) * std::log(std::exp(1.0) / (12.0 * k)) +
         (n + 0.5 * (3 * k - 1)) * std::log(static_cast<double>(n));
}

double log_tree_polynomial(int n, long y) {
  const Integer t = tree_polynomial(n, y);
  if (t == 0) throw invalid_input("log_tree_polynomial: t_n(y) is zero");
  return log_abs(t);
}

Rational labelled_count(const XExpr& e, int n) {
  if (e.log_coeff() != 0) throw invalid_input("labelled_count: logarithmic term not supported");
  Rational total = 0;
  for (const auto& [t, c] : e.laurent()) total += c * Rational(tree_polynomial(n, t));
  return total;
}

std::vector<double> wright_d(int kmax) {
  const auto tab = census::wright_constants(kmax);
  std::vector<double> d(kmax + 1, 0.0);
  for (int k = 1; k <= kmax; ++k)
    d[k] = std::exp(log_abs(tab.b[k]) - k * std::log(1.5) - std::lgamma(static_cast<double>(k)));
  return d;
}

namespace {

// sum_{n>=1} n^(n-1) z^n / n! for z = (1 - d2)/e, summed until the tail
// (1 - d2)^n / (sqrt(2 pi) n^(3/2)) is negligible.
long double tree_sum(long double d2) {
  const long double z = (1 - d2) / std::exp(1.0L);
  const long N = static_cast<long>(40.0L / d2) + 1000;
  long double term = z;  // n = 1
  long double sum = 0, comp = 0;
  for (long n = 1; n <= N; ++n) {
    // Kahan summation
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    // term_{n+1} / term_n = z (1 + 1/n)^(n-1)
    term *= z * std::exp((n - 1) * std::log1p(1.0L / n));
  }
  return sum;
}

long double tree_newton(long double d2) {
  // ln u - u = ln z = ln(1 - d2) - 1; start left of the singular point.
  const long double target = std::log1p(-d2) - 1;
  long double u = 1 - std::sqrt(2 * d2);
  for (int it = 0; it < 100; ++it) {
    const long double f = std::log(u) - u - target;
    const long double step = f / (1 / u - 1);
    u -= step;
    if (u >= 1) u = 1 - 1e-18L;
    if (std::fabs(step) < 1e-19L) break;
  }
  return u;
}

}  // namespace

SingularReport singular_expansion_check(int terms) {
  if (terms < 1 || terms > 4) throw invalid_input("singular_expansion_check: terms must be 1..4");
  const long double sqrt2 = std::sqrt(2.0L);
  const long double coeff[4] = {1, -sqrt2, 2.0L / 3, -11 * sqrt2 / 36};
  SingularReport rep;
  rep.terms = terms;
  for (double delta = 1e-2; delta >= 1e-3 * 0.999; delta /= 2) {
    const long double d = delta;
    SingularRow row;
    row.delta = delta;
    const long double ts = tree_sum(d * d);
    const long double tn = tree_newton(d * d);
    row.t_series = static_cast<double>(ts);
    row.t_newton = static_cast<double>(tn);
    rep.max_series_newton_gap =
        std::max(rep.max_series_newton_gap, static_cast<double>(std::fabs(ts - tn)));
    long double partial = 0, dp = 1;
    for (int j = 0; j < terms; ++j) {
      partial += coeff[j] * dp;
      dp *= d;
      row.scaled.push_back(static_cast<double>((ts - partial) / dp));
    }
    rep.second_coefficient = static_cast<double>((ts - 1 + sqrt2 * d) / (d * d));
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace sparsecc::asymptotics
