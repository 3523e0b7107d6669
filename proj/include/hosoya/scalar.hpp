#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace hosoya {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_decimal(const BigInt& value);

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_decimal(const Rational& value);

// Parses an optionally signed decimal integer; nullopt on malformed text.
std::optional<BigInt> parse_decimal(std::string_view text);

// numerator / denominator, throwing IdentityViolation when the division is
// not exact. `what` names the quantity for the diagnostic.
BigInt exact_div(const BigInt& numerator, const BigInt& denominator,
                 std::string_view what);

// Integer square root when `value` is a perfect square.
std::optional<BigInt> exact_sqrt(const BigInt& value);

inline int sign_of(const BigInt& value) {
  return value.sign();
}

// (-1)^k for any signed k.
inline int parity_sign(long long k) {
  return (k % 2 == 0) ? 1 : -1;
}

}  // namespace hosoya
