#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace linepat {

// Exact arbitrary-precision integer / rational scalars. The rational type
// keeps its canonical form (denominator > 0, gcd(num, den) == 1) after every
// operation, so equality and ordering are plain value comparisons.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "+p", "-p" or "p/q" (decimal digits, q != 0). Throws
// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

BigInt floor_to_int(const Rational& value);
BigInt ceil_to_int(const Rational& value);

// Fixed-point decimal with exactly `digits` fraction digits, rounding half
// away from zero. Computed in exact arithmetic; this is the only lossy
// conversion in the project and is used for SVG coordinates only.
std::string to_decimal_string(const Rational& value, int digits);

}  // namespace linepat
