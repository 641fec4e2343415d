#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace popmatch {

// Exact arbitrary-precision rational. Popularity verdicts are sign tests on
// weight sums, so no floating point anywhere in the vote arithmetic.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input or a
// zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace popmatch
