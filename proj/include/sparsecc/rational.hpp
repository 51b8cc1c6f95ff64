#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sparsecc {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms.
Rational rat(long num, long den = 1);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws invalid_input.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer power(const Integer& base, unsigned long e);

// Natural log of |x|, accurate for numbers far beyond double range.
// x must be nonzero.
double log_abs(const Integer& x);
double log_abs(const Rational& x);

double to_double(const Rational& q);

}  // namespace sparsecc
