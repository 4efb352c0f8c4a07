#include "visicube/rational.hpp"

#include <stdexcept>

namespace visicube {

BigInt int_pow(const BigInt& base, unsigned exp) {
  BigInt out = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

std::string to_decimal_string(const Rational& x, int digits) {
  if (digits < 0) throw std::invalid_argument("to_decimal_string: digits < 0");
  const bool negative = x < 0;
  const Rational mag = negative ? -x : x;
  const BigInt scaled =
      boost::multiprecision::numerator(mag) * int_pow(10, static_cast<unsigned>(digits)) /
      boost::multiprecision::denominator(mag);
  std::string body = scaled.str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  if (digits > 0) body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return negative ? "-" + body : body;
}

}  // namespace visicube
