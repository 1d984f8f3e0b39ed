#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace vcvis {

// Arbitrary precision rational. GMP keeps results of arithmetic in canonical
// form (gcd = 1, positive denominator); values built from a raw
// numerator/denominator pair must go through make_rational.
using Rational = mpq_class;

Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1);

// Accepts "12", "-3", "0.125", "-1.5", "7/3", "-7/3".
// Throws Error(kParseError) on anything else.
Rational parse_rational(std::string_view text);

// "a" for integers, "a/b" otherwise. parse_rational(format_rational(x)) == x.
std::string format_rational(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

double to_double(const Rational& value);

}  // namespace vcvis
