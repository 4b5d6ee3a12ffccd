#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace leelab {

/// Arbitrary-precision nonnegative counts (volumes, intersection sizes, code counts).
using Count = mpz_class;
/// Exact rationals for bounds, densities and averages.
using Ratio = mpq_class;

/// C(a, b) with the repository-wide convention: 0 when b < 0 or b > a, and
/// C(a, 0) = 1 for a >= 0.
Count binomial(long a, long b);

Count power(const Count& base, unsigned long exponent);
Count power(long base, unsigned long exponent);
Ratio power(const Ratio& base, unsigned long exponent);

/// Sign-aware integer power of a rational; negative exponents invert.
Ratio power_signed(const Ratio& base, long exponent);

/// Canonicalized rational a/b.
Ratio make_ratio(const Count& num, const Count& den);
Ratio make_ratio(long num, long den);

Count floor(const Ratio& q);
Count ceil(const Ratio& q);

/// "a/b", or "a" when the denominator is 1.
std::string to_fraction(const Ratio& q);
std::string to_string(const Count& c);

/// Decimal rendering with `significant` significant digits.
std::string to_decimal(const Ratio& q, int significant = 12);

/// log2 of a positive integer or rational as long double; -inf for zero.
long double log2(const Count& c);
long double log2(const Ratio& q);

/// Parses "a/b", "a" or a finite decimal like "0.125" into an exact rational.
Ratio parse_ratio(const std::string& text);

/// Exact test of  value <= 2^exponent  for value >= 0.
bool le_power_of_two(const Count& value, const Ratio& exponent);

}  // namespace leelab
