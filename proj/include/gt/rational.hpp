#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "n", "-n", "n/d" with arbitrary-precision parts; throws ParseError.
Rational parse_rational(const std::string& s);

// Canonical form: "n" when the denominator is 1, else "n/d", no spaces.
std::string format_rational(const Rational& q);

}  // namespace gt
