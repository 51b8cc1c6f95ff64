#include <random>

#include "doctest.h"
#include "sparsecc/errors.hpp"
#include "sparsecc/series.hpp"

using namespace sparsecc;

namespace {

// (1 - T)^(-y) by naive products of the tree series, built here from n^(n-1)/n!.
std::vector<Rational> naive_x_power(int y, int order) {
  std::vector<Rational> t(order + 1, Rational(0));
  for (int n = 1; n <= order; ++n)
    t[n] = Rational(power(Integer(n), n - 1)) / Rational(factorial(n));
  // 1/(1 - T) = sum_j T^j
  std::vector<Rational> inv(order + 1, Rational(0)), tj(order + 1, Rational(0));
  tj[0] = 1;
  for (int j = 0; j <= order; ++j) {
    for (int n = 0; n <= order; ++n) inv[n] += tj[n];
    std::vector<Rational> next(order + 1, Rational(0));
    for (int a = 0; a <= order; ++a)
      for (int b = 1; a + b <= order; ++b) next[a + b] += tj[a] * t[b];
    tj = next;
  }
  std::vector<Rational> out(order + 1, Rational(0));
  out[0] = 1;
  for (int i = 0; i < y; ++i) {
    std::vector<Rational> next(order + 1, Rational(0));
    for (int a = 0; a <= order; ++a)
      for (int b = 0; a + b <= order; ++b) next[a + b] += out[a] * inv[b];
    out = next;
  }
  return out;
}

Series random_series(std::mt19937& rng, int order, bool unit_constant) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  Series s(order);
  for (int n = 0; n <= order; ++n) s[n] = rat(num(rng), den(rng));
  if (unit_constant) s[0] = 1;
  return s;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("formatting and parsing round-trip") {
    CHECK(to_string(rat(10, 4)) == "5/2");
    CHECK(to_string(rat(-6, 3)) == "-2");
    CHECK(parse_rational("-19/24") == rat(-19, 24));
    CHECK(parse_rational("7") == 7);
    for (const Rational& q : {rat(5, 24), rat(-65, 48), rat(0), rat(123456789, 1000)})
      CHECK(parse_rational(to_string(q)) == q);
    CHECK_THROWS_AS(parse_rational("1/0"), invalid_input);
    CHECK_THROWS_AS(parse_rational("abc"), invalid_input);
    CHECK_THROWS_AS(parse_rational(""), invalid_input);
  }

  TEST_CASE("integer helpers") {
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(28, 10) == 13123110);
    CHECK(binomial(5, 7) == 0);
    CHECK(power(Integer(3), 5) == 243);
  }

  TEST_CASE("log_abs beyond double range") {
    const Integer big = power(Integer(10), 1000);
    CHECK(log_abs(big) == doctest::Approx(1000 * std::log(10.0)).epsilon(1e-13));
    CHECK(log_abs(Rational(1) / Rational(big)) ==
          doctest::Approx(-1000 * std::log(10.0)).epsilon(1e-13));
    CHECK(log_abs(Rational(-3, 2)) == doctest::Approx(std::log(1.5)));
  }
}

TEST_SUITE("series") {
  TEST_CASE("exp and log are inverse") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 5; ++rep) {
      Series a = random_series(rng, 12, true);
      CHECK(exp(log(a)) == a);
      Series b = random_series(rng, 12, false);
      b[0] = 0;
      CHECK(log(exp(b)) == b);
    }
  }

  TEST_CASE("inverse and negative powers") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 5; ++rep) {
      Series a = random_series(rng, 10, true);
      CHECK(a * inverse(a) == Series::constant(10, 1));
      CHECK(pow(a, -3) * pow(a, 3) == Series::constant(10, 1));
    }
    CHECK_THROWS_AS(inverse(Series(4)), invalid_input);
  }

  TEST_CASE("theta multiplies the n-th coefficient by n") {
    Series a(5, {1, 2, 3, 4, 5, 6});
    const Series t = theta(a);
    for (int n = 0; n <= 5; ++n) CHECK(t[n] == n * a[n]);
  }

  TEST_CASE("tree series counts rooted trees") {
    const Series t = cayley_tree_series(10);
    for (int n = 1; n <= 10; ++n) CHECK(t.labelled_count(n) == Rational(power(Integer(n), n - 1)));
    // T = z exp(T)
    Series z = Series::monomial(10, 1, 1);
    CHECK(z * exp(t) == t);
  }

  TEST_CASE("x_power_series against naive products") {
    for (int y : {1, 2, 3, 5}) {
      const auto naive = naive_x_power(y, 12);
      const Series s = x_power_series(y, 12);
      for (int n = 0; n <= 12; ++n) CHECK(s[n] == naive[n]);
    }
    // (1 - T)^2 = 1 - 2T + T^2
    const Series t = cayley_tree_series(10);
    const Series one = Series::constant(10, 1);
    CHECK(x_power_series(-2, 10) == one - Rational(2) * t + t * t);
  }

  TEST_CASE("tree polynomials") {
    for (int n = 1; n <= 12; ++n) {
      CHECK(tree_polynomial(n, 1) == power(Integer(n), n));
      CHECK(tree_polynomial(n, 0) == 0);
      for (int y : {2, 3, 4}) {
        const auto naive = naive_x_power(y, n);
        CHECK(Rational(tree_polynomial(n, y)) == naive[n] * Rational(factorial(n)));
      }
    }
    CHECK(tree_polynomial(0, 3) == 1);
  }
}
