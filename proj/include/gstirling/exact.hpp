#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gstirling {

// Arbitrary-precision integers and canonical rationals. Backed by
// Boost.Multiprecision; cpp_rational keeps gcd(|num|, den) = 1, den > 0 and
// zero as 0/1 through every operation, which is exactly the canonical form
// the rest of the library relies on for structural equality.
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical rational from a (possibly negative-denominator) fraction.
// Throws std::domain_error when den == 0.
Rational make_rational(BigInt num, BigInt den);

inline Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
inline Rational rat_sub(const Rational& a, const Rational& b) { return a - b; }
inline Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }
inline Rational rat_neg(const Rational& a) { return -a; }

// Reciprocal; throws std::domain_error on zero.
Rational rat_inv(const Rational& a);

BigInt factorial(unsigned n);

// C(n, m); zero when m > n.
BigInt binomial(unsigned n, unsigned m);

BigInt int_pow(const BigInt& base, unsigned exp);

double to_double(const Rational& r);

// "p/q" codec, the canonical serialization used by every emitter. The
// denominator is omitted when it is 1; the sign sits on the numerator.
std::string format_rational(const Rational& r);

// Accepts [+-]?digits or [+-]?digits/[+-]?digits and canonicalizes.
// Throws std::invalid_argument on malformed text, std::domain_error on /0.
Rational parse_rational(std::string_view text);

}  // namespace gstirling
