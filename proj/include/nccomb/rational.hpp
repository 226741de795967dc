#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nccomb {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "p", "p/q", "-p/q" with optional surrounding spaces. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

Rational pow(const Rational& base, unsigned long exponent);

}  // namespace nccomb
