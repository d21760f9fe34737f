#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace walkprint {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with decimal digits and q > 0. Anything else
// (floats, exponents, zero denominators, stray characters) is a parse error.
Rational parse_rational(const std::string& text);

// Canonical text form: "p/q", or bare "p" when the denominator is 1.
std::string format_rational(const Rational& value);

// Decimal rendering to `digits` significant digits.
std::string format_decimal(const Rational& value, int digits = 12);

double to_double(const Rational& value);

// Exact dyadic rational equal to the given double. Requires a finite input.
Rational exact_from_double(double x);

// Best rational approximation p/q with q <= max_den (continued-fraction
// convergents plus the final semiconvergent). Returned only when
// |p/q - x| <= within.
std::optional<Rational> round_to_small_denominator(double x, unsigned long max_den, double within);

}  // namespace walkprint
