#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace quadrics {

// All coefficient arithmetic in this library is exact. Rational values are
// kept canonical (lowest terms, positive denominator) by GMP.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (arbitrary precision, optional sign). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Rational from a possibly unreduced fraction. GMP arithmetic assumes
/// canonical operands, so every fraction built from parts must go through
/// here (the mpq_class two-argument constructor does not reduce).
Rational make_rational(long num, long den);

/// Canonical "p/q" rendering; integers render without the "/q" part.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Smallest integer >= value.
Integer ceil_rational(const Rational& value);

/// Largest integer <= value.
Integer floor_rational(const Rational& value);

/// -1, 0 or +1.
inline int sign_of(const Rational& value) { return sgn(value); }

/// Exact square root when value is the square of a rational, else nullopt.
std::optional<Rational> exact_sqrt(const Rational& value);

Integer binomial(unsigned long n, unsigned long k);
Integer pow_integer(const Integer& base, unsigned long exp);
Rational pow_rational(const Rational& base, unsigned long exp);

}  // namespace quadrics
