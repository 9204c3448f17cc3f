#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace recon {

// Exact arbitrary-precision scalars.  mpq_class values produced by arithmetic
// are always canonical (gcd(|num|, den) = 1, den > 0); values built from raw
// integer pairs go through make_rational which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p" with optional sign.  Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Decimal rendering with the given number of significant digits, round half
/// away from zero.  Exactness elsewhere is unaffected; this is output only.
std::string to_decimal(const Rational& q, int significant_digits = 12);

inline int sign_of(const Rational& q) { return sgn(q); }

Rational pow_int(const Rational& base, int exponent); // exponent >= 0

} // namespace recon
