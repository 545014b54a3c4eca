#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace pexeq {

/// Exact arbitrary-precision integer. All arithmetic in this project is
/// exact; there is no floating point anywhere on a result path.
using Int = mpz_class;

/// Exact rational, kept in lowest terms with a positive denominator.
using Rat = mpq_class;

/// Builds a rational num/den in canonical form (den > 0, gcd(|num|,den) = 1).
/// Throws std::invalid_argument when den == 0.
Rat make_rat(const Int& num, const Int& den);

/// Floor of the square root: result^2 <= n < (result+1)^2.
/// Throws std::invalid_argument for negative n.
Int isqrt(const Int& n);

/// Returns s with s^2 == n when n is a perfect square, otherwise empty.
std::optional<Int> is_perfect_square(const Int& n);

struct PowerForm {
    Int base;
    unsigned long exp; // >= 2
};

/// Decides whether n = base^exp for some exp >= 2, returning the form with
/// the smallest base (equivalently the largest exponent). Requires n >= 2.
std::optional<PowerForm> is_perfect_power(const Int& n);

/// Returns z >= 0 with c^z == n if such an exponent exists, otherwise empty.
/// Requires n >= 1 and c >= 2.
std::optional<unsigned long> pow_of_base(const Int& n, const Int& c);

/// Greatest common divisor with the usual convention gcd(0,n) = n.
Int gcd(const Int& m, const Int& n);

/// Exact base^e.
Int pow_int(const Int& base, unsigned long e);

std::string to_decimal(const Int& n);
std::string to_decimal(const Rat& q);

/// Parses a decimal integer string. Throws std::invalid_argument on junk.
Int parse_int(const std::string& text);

} // namespace pexeq
