#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace gcset {

// Exact scalars. Every decision in this library is made over Q; no floating
// point appears anywhere in a decision path. GMP keeps values canonical:
// reduced, denominator positive, zero stored as 0/1.
using Int = mpz_class;
using Rat = mpq_class;

// Builds a canonical rational from machine integers. den must be nonzero.
Rat rat(long num, long den = 1);

// Strict parse of "p" or "p/q" with q a positive integer (q = 0 rejected).
// Returns nullopt on any malformed input, including stray whitespace.
std::optional<Rat> parse_rational(const std::string& text);

// "p" or "p/q", reduced, denominator omitted when 1.
std::string to_string(const Rat& value);

inline int sign(const Rat& value) { return sgn(value); }

}  // namespace gcset
