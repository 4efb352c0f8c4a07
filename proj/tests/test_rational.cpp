#include <doctest.h>

#include "visicube/rational.hpp"

using namespace visicube;

TEST_CASE("integer powers") {
  CHECK(int_pow(BigInt(2), 10) == 1024);
  CHECK(int_pow(BigInt(3), 0) == 1);
  CHECK(int_pow(BigInt(10), 30) == BigInt("1000000000000000000000000000000"));
}

TEST_CASE("decimal rendering truncates toward zero") {
  CHECK(to_decimal_string(Rational(14, 75), 4) == "0.1866");
  CHECK(to_decimal_string(Rational(1, 2), 3) == "0.500");
  CHECK(to_decimal_string(Rational(7, 1), 2) == "7.00");
  CHECK(to_decimal_string(Rational(-14, 75), 4) == "-0.1866");
  CHECK(to_decimal_string(Rational(0), 5) == "0.00000");
  CHECK(to_decimal_string(Rational(124, 3), 0) == "41");
}

TEST_CASE("rationals normalize") {
  CHECK(Rational(56, 100) / 3 == Rational(14, 75));
  CHECK(Rational(2, 4) == Rational(1, 2));
}
