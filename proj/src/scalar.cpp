#include "hosoya/scalar.hpp"

#include "hosoya/errors.hpp"

#include <cctype>

namespace hosoya {

std::string to_decimal(const BigInt& value) {
  return value.str();
}

std::string to_decimal(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<BigInt> parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) return std::nullopt;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  }
  BigInt value(std::string(text.substr(pos)));
  if (text[0] == '-') value = -value;
  return value;
}

BigInt exact_div(const BigInt& numerator, const BigInt& denominator,
                 std::string_view what) {
  if (denominator == 0) {
    throw IdentityViolation(std::string(what) + ": division by zero");
  }
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw IdentityViolation(std::string(what) + ": " + numerator.str() +
                            " is not divisible by " + denominator.str());
  }
  return quotient;
}

std::optional<BigInt> exact_sqrt(const BigInt& value) {
  if (value < 0) return std::nullopt;
  BigInt root = boost::multiprecision::sqrt(value);
  if (root * root != value) return std::nullopt;
  return root;
}

}  // namespace hosoya
