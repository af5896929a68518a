#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace immvar {

// Exact arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form this library relies on everywhere: gcd(num, den) = 1 and
// den > 0, with the sign carried by the numerator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string to_string(const Int& v);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rat& v);

// Accepts exactly the strings produced by to_string: an optional leading
// minus, digits, and an optional "/digits" with a positive denominator.
// Throws ParseError on anything else (including "x/0").
Rat parse_rat(std::string_view text);

bool is_integer(const Rat& v);

// Throws InvalidArgumentError when v is not an integer.
Int to_integer(const Rat& v);

Int int_pow(const Int& base, unsigned exp);

} // namespace immvar
