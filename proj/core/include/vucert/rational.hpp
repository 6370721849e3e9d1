#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vucert {

/// Arbitrary-precision integer. All arithmetic in this library is exact;
/// nothing is ever rounded.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form by the backend:
/// positive denominator, gcd(|num|, den) = 1. Equality is structural.
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Renders "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& q);

/// Accepts "p" or "p/q" with optional leading '-'; q must be nonzero.
/// Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Euler's totient, by trial-division factorization. Total for m >= 1.
Int euler_phi(const Int& m);

/// Divisors of m in increasing order.
std::vector<Int> divisors(const Int& m);

}  // namespace vucert
