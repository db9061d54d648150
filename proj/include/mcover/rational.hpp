#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mcover {

// Arbitrary-precision rational; all weight arithmetic stays exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "7", "-3", "3/4", "0.25", "1e2" is NOT accepted. Throws
// ContractError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& r);

}  // namespace mcover
