#include "sparsecc/probability.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sparsecc/census.hpp"
#include "sparsecc/errors.hpp"

namespace sparsecc::probability {

namespace {

Rational polygon_sum(const std::vector<int>& theta) {
  std::set<int> seen;
  Rational s = 0;
  for (int p : theta) {
    if (p < 3) throw invalid_input("polygon length must be >= 3");
    if (!seen.insert(p).second) throw invalid_input("duplicate polygon length");
    s += rat(1, 2 * p);
  }
  return s;
}

double base_factor(const Rational& polygons) {
  return std::sqrt(2.0 / 3.0) * std::exp(-to_double(polygons));
}

}  // namespace

int ComponentProfile::weighted_total() const {
  int total = 0;
  for (std::size_t i = 0; i < r.size(); ++i) total += static_cast<int>(i + 1) * r[i];
  return total;
}

ProfileProbability profile_probability(const ComponentProfile& profile,
                                       const std::vector<int>& theta,
                                       const std::vector<Deduction>& deductions) {
  for (int ri : profile.r)
    if (ri < 0) throw invalid_input("profile entries must be >= 0");
  int kmax = std::max<int>(1, static_cast<int>(profile.r.size()));
  std::set<int> deducted;
  for (const auto& d : deductions) {
    if (d.k < 1) throw invalid_input("deduction excess must be >= 1");
    if (!deducted.insert(d.k).second) throw invalid_input("two deductions for the same excess");
    kmax = std::max(kmax, d.k);
  }
  const auto tab = census::wright_constants(kmax);
  std::vector<Rational> b(tab.b);
  for (const auto& d : deductions) {
    if (d.cH < 0 || d.cH > b[d.k])
      throw invalid_input("deduction c(H) = " + to_string(d.cH) + " outside [0, b_" +
                          std::to_string(d.k) + "]");
    b[d.k] -= d.cH;
  }

  ProfileProbability result;
  const int r = profile.weighted_total();
  Rational exact = Rational(factorial(r)) / Rational(factorial(2 * r));
  Rational four_thirds = rat(4, 3);
  for (int i = 0; i < r; ++i) exact *= four_thirds;
  for (std::size_t i = 0; i < profile.r.size(); ++i) {
    const int ri = profile.r[i];
    Rational term = 1;
    for (int j = 0; j < ri; ++j) term *= b[i + 1];
    exact *= term / Rational(factorial(ri));
  }
  result.exact = exact;
  result.polygon_sum = polygon_sum(theta);
  result.value = to_double(exact) * base_factor(result.polygon_sum);
  return result;
}

double low_complexity_probability(int max_excess, const std::vector<int>& theta) {
  const Rational polygons = polygon_sum(theta);
  switch (max_excess) {
    case 0: return base_factor(polygons);
    // sum_r (4/3 b_1)^r / (2r)! = cosh(sqrt(5/18))
    case 1: return base_factor(polygons) * std::cosh(std::sqrt(5.0 / 18.0));
    default: throw invalid_input("low_complexity_probability supports max excess 0 or 1");
  }
}

Rational coefficient_weight(Model model, int n, long m) {
  if (n < 1 || m < 0) throw invalid_input("coefficient_weight: need n >= 1 and m >= 0");
  const Integer nf = factorial(n);
  if (model == Model::graph) {
    const unsigned long pairs = static_cast<unsigned long>(n) * (n - 1) / 2;
    if (static_cast<unsigned long>(m) > pairs)
      throw invalid_input("coefficient_weight: m exceeds C(n,2)");
    return Rational(nf) / Rational(binomial(pairs, m));
  }
  Rational w(power(Integer(2), m) * factorial(m) * nf);
  w /= Rational(power(Integer(n), 2 * m));
  return w;
}

double coeff_to_probability(Model model, int n, long m, const Rational& coeff) {
  return to_double(coefficient_weight(model, n, m) * coeff);
}

long edge_count(long n, double mu) {
  if (n < 1) throw invalid_input("edge_count: n must be >= 1");
  const double nd = static_cast<double>(n);
  if (std::fabs(mu) > std::pow(nd, 1.0 / 12.0))
    throw invalid_input("edge_count: |mu| exceeds n^(1/12)");
  return std::lround(nd / 2 * (1 + mu * std::pow(nd, -1.0 / 3.0)));
}

double binomial_ratio_gap(int n, long m) {
  if (n < 2 || m < 0) throw invalid_input("binomial_ratio_gap: need n >= 2, m >= 0");
  const unsigned long pairs = static_cast<unsigned long>(n) * (n - 1) / 2;
  if (static_cast<unsigned long>(m) > pairs) throw invalid_input("binomial_ratio_gap: m too large");
  // C(N,m) 2^m m! / n^(2m) as an exact rational, then its log.
  Rational ratio(binomial(pairs, m) * power(Integer(2), m) * factorial(m));
  ratio /= Rational(power(Integer(n), 2 * m));
  const double nd = n;
  return log_abs(ratio) + m / nd + static_cast<double>(m) * m / (nd * nd);
}

}  // namespace sparsecc::probability
