#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace floerlab {

/// Exact rational arithmetic. Every area, Morse value and action in the
/// library is one of these; floating point only appears in symprod.
using Rational = mpq_class;

/// Parses "p/q", "p" or a finite decimal such as "0.125". Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" with q > 1, or "p".
std::string to_string(const Rational& value);

Rational make_rational(long numerator, long denominator = 1);

/// floor(value) as an integer; throws std::overflow_error if it does not fit.
long floor_to_long(const Rational& value);

}  // namespace floerlab
