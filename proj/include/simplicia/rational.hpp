#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace simplicia {

/// Exact rational scalar used by every geometric predicate.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a plain decimal ("-0.25", "1.5e-3").
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" for integers, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);

/// Rounded decimal rendering with `significant` digits, for reports only.
std::string to_decimal(const Rational& value, int significant = 6);

Rational abs(const Rational& value);

/// base^exponent for exponent >= 0.
Rational power(const Rational& base, unsigned exponent);

}  // namespace simplicia
