#pragma once

#include "hosoya/errors.hpp"
#include "hosoya/polynomial.hpp"
#include "hosoya/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hosoya {

// Dense row-major matrix over an exact scalar. Indices are 0-based.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init)
      : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw DomainError("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_).subspan(i * cols_, cols_);
  }
  std::span<const T> entries() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;
using Vector = std::vector<BigInt>;

ExactMatrix transpose(const ExactMatrix& m);
ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
ExactMatrix hadamard(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix scale(const ExactMatrix& m, const BigInt& factor);

// M^k by repeated squaring; M^0 is the identity.
ExactMatrix matpow(const ExactMatrix& m, unsigned k);

BigInt trace(const ExactMatrix& m);
Vector mat_vec(const ExactMatrix& m, std::span<const BigInt> v);
ExactMatrix outer(std::span<const BigInt> u, std::span<const BigInt> v);
BigInt dot(std::span<const BigInt> u, std::span<const BigInt> v);

RationalMatrix to_rational(const ExactMatrix& m);

// Entrywise reduction to the least nonnegative residue mod `modulus`.
ExactMatrix reduce_mod(const ExactMatrix& m, const BigInt& modulus);

// Largest absolute row sum.
BigInt inf_norm(const ExactMatrix& m);
BigInt entry_sum(const ExactMatrix& m);

bool is_antidiagonal(const ExactMatrix& m);

// Fraction-free (Bareiss) elimination with row pivoting.
BigInt det(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);

// Gauss-Jordan over the rationals. Throws SingularMatrixError.
RationalMatrix inverse_rational(const ExactMatrix& m);

// det(xI - M) via Faddeev-LeVerrier. Every intermediate division is exact
// for integer M, and is checked.
IntPolynomial char_poly(const ExactMatrix& m);

}  // namespace hosoya
