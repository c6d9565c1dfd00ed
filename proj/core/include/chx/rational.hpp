#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

// Exact scalar arithmetic for the whole engine.  Every quantity the engine
// touches is an arbitrary-precision integer or a reduced fraction thereof;
// floating point is banned project-wide.

namespace chx {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

[[nodiscard]] Int numerator(const Rational& q);
[[nodiscard]] Int denominator(const Rational& q);

// num/den in lowest terms with positive denominator.  Unlike the raw
// two-argument Rational constructor this accepts a negative denominator;
// den == 0 throws std::invalid_argument.
[[nodiscard]] Rational make_rational(const Int& num, const Int& den);

[[nodiscard]] bool is_integer(const Rational& q);

// Throws std::invalid_argument unless q has denominator 1.
[[nodiscard]] Int to_integer(const Rational& q);

// Residue of an integral rational mod 2, as 0 or 1.
[[nodiscard]] int parity(const Rational& q);

// "p/q" for proper fractions, plain "p" for integers.
[[nodiscard]] std::string to_string(const Rational& q);

// Inverse of to_string.  Accepts optional sign, digits, optional "/digits".
// Throws std::invalid_argument with the offending text on malformed input.
[[nodiscard]] Rational parse_rational(const std::string& text);

[[nodiscard]] Rational pow_rational(const Rational& base, int exponent);

[[nodiscard]] Int factorial(int n);
[[nodiscard]] Int binomial(int n, int k);

}  // namespace chx
