#pragma once

#include "hosoya/scalar.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace hosoya {

// Dense univariate polynomial with arbitrary-precision integer
// coefficients, lowest degree first. Trailing zeros are trimmed, so the
// zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial monomial(std::size_t degree, BigInt coefficient = 1);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of x^power; zero past the degree.
  BigInt coefficient(std::size_t power) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) {
    return lhs += rhs;
  }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend IntPolynomial operator*(const IntPolynomial& lhs,
                                 const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Human-readable form, e.g. "x^3 - x^2 - 4x + 4".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

}  // namespace hosoya
