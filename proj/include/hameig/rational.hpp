#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hameig {

/// Exact rational value. GMP keeps it canonical: lowest terms, positive
/// denominator, arbitrary-precision integer parts.
using Rational = mpq_class;

/// Parses "p" or "p/q" with decimal digits and an optional leading '-' on p;
/// q must be a positive integer. Anything else is rejected.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or just "p" for integers.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace hameig
