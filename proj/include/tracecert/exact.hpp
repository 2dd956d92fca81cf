#pragma once

// Exact scalar types. Every number that takes part in a verification is an
// arbitrary-precision integer or rational; nothing in this library rounds.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tracecert {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: lowest terms, positive denominator

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }
inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_zero(const Integer& value) { return sgn(value) == 0; }

Integer binomial(long n, long k);

}  // namespace tracecert
