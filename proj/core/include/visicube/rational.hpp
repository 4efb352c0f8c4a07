#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace visicube {

// Every bound in this library is compared exactly; floating point only
// ever appears in human-facing renderings.  Boost.Multiprecision's
// arbitrary-precision integers and rationals carry the arithmetic.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt int_pow(const BigInt& base, unsigned exp);

// Decimal rendering truncated toward zero after `digits` fractional
// digits, e.g. to_decimal_string(Rational(14, 75), 4) == "0.1866".
std::string to_decimal_string(const Rational& x, int digits);

}  // namespace visicube
