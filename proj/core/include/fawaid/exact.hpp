#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fawaid {

/// Arbitrary-precision signed integer. Arithmetic never overflows or rounds.
using Integer = mpz_class;

/// Arbitrary-precision rational, kept canonical: denominator > 0 and
/// gcd(|num|, den) = 1. Equality after construction is structural.
using Rational = mpq_class;

/// Canonical rational from a numerator/denominator pair.
/// Throws std::domain_error on zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline const Integer& numerator(const Rational& q) { return q.get_num(); }
inline const Integer& denominator(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Floor of the square root of a nonnegative integer, computed by Newton
/// iteration seeded from the bit length. Result r satisfies
/// r*r <= n < (r+1)*(r+1). Throws std::domain_error for n < 0.
Integer isqrt(const Integer& n);

/// Floor of the k-th root of a nonnegative integer (k >= 1).
Integer ikth_root(const Integer& n, unsigned k);

/// Exact k-th root of an integer if one exists. k >= 2; for even k the
/// input must be nonnegative (negative input yields empty, odd k allows
/// negative inputs with negative roots). For even k the nonnegative root
/// is returned.
std::optional<Integer> perfect_power_root(const Integer& n, unsigned k);

/// Exact k-th root of a rational if one exists. A reduced fraction a/b is
/// a k-th power iff a and b both are. Even roots of negatives are empty.
std::optional<Rational> rational_kth_root(const Rational& q, unsigned k);

inline bool is_square(const Rational& q) {
  return sgn(q) >= 0 && rational_kth_root(q, 2).has_value();
}
inline bool is_cube(const Rational& q) {
  return rational_kth_root(q, 3).has_value();
}

/// Height of a rational in lowest terms: max(|numerator|, denominator).
Integer height(const Rational& q);

/// Parses an exact rational written as "a" or "a/b" (optional leading '-',
/// decimal digits only). Decimal points are rejected to preserve exactness.
std::optional<Rational> parse_rational(std::string_view text);

/// Renders canonically: "41/12", "-7", "0".
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

}  // namespace fawaid
