#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qbern {

using Integer = mpz_class;
/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// num/den in lowest terms; throws DomainError on a zero denominator.
Rational ratio(long num, long den);

/// Parses "p/q" or "p" (optional leading '-'); the result is canonical.
/// Throws ArgumentError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers render without a denominator ("7", "-2/3").
std::string to_string(const Rational& value);

/// Scientific decimal rendering with `digits` significant digits, e.g.
/// "2.5000000000000000e-03". Display only; never parsed back.
std::string to_decimal(const Rational& value, int digits = 17);

/// base^exponent; negative exponents require a nonzero base.
Rational pow(const Rational& base, long exponent);

}  // namespace qbern
