#include "hosoya/matrix.hpp"

#include <string>
#include <utility>

namespace hosoya {
namespace {

void require_square(const ExactMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw DomainError(std::string(op) + " requires a square matrix, got " +
                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError(std::string(op) + ": dimension mismatch");
  }
}

template <typename T>
Matrix<T> matmul_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("matmul: inner dimensions " + std::to_string(a.cols()) +
                      " and " + std::to_string(b.rows()) + " differ");
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

// Runs Bareiss elimination in place. Returns the rank and accumulates the
// row-swap sign. On a square full-rank input the last pivot is det / sign.
std::size_t bareiss(ExactMatrix& a, int& swap_sign) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  BigInt previous = 1;
  std::size_t pivot_row = 0;
  swap_sign = 1;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = pivot_row;
    while (found < rows && a(found, col) == 0) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(found, j), a(pivot_row, j));
      swap_sign = -swap_sign;
    }
    const BigInt pivot = a(pivot_row, col);
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a(i, j) = (a(i, j) * pivot - a(i, col) * a(pivot_row, j)) / previous;
      }
      a(i, col) = 0;
    }
    previous = pivot;
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

ExactMatrix transpose(const ExactMatrix& m) {
  ExactMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
  return matmul_impl(a, b);
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  return matmul_impl(a, b);
}

ExactMatrix hadamard(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b, "hadamard");
  ExactMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * b(i, j);
  }
  return out;
}

ExactMatrix scale(const ExactMatrix& m, const BigInt& factor) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * factor;
  }
  return out;
}

ExactMatrix matpow(const ExactMatrix& m, unsigned k) {
  require_square(m, "matpow");
  ExactMatrix result = ExactMatrix::identity(m.rows());
  ExactMatrix base = m;
  while (k > 0) {
    if (k & 1U) result = matmul(result, base);
    k >>= 1U;
    if (k > 0) base = matmul(base, base);
  }
  return result;
}

BigInt trace(const ExactMatrix& m) {
  require_square(m, "trace");
  BigInt sum = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, i);
  return sum;
}

Vector mat_vec(const ExactMatrix& m, std::span<const BigInt> v) {
  if (v.size() != m.cols()) throw DomainError("mat_vec: dimension mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), v);
  return out;
}

ExactMatrix outer(std::span<const BigInt> u, std::span<const BigInt> v) {
  ExactMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
  }
  return out;
}

BigInt dot(std::span<const BigInt> u, std::span<const BigInt> v) {
  if (u.size() != v.size()) throw DomainError("dot: length mismatch");
  BigInt sum = 0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

RationalMatrix to_rational(const ExactMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  }
  return out;
}

ExactMatrix reduce_mod(const ExactMatrix& m, const BigInt& modulus) {
  if (modulus < 2) throw DomainError("modulus must be >= 2");
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt r = m(i, j) % modulus;
      if (r < 0) r += modulus;
      out(i, j) = r;
    }
  }
  return out;
}

BigInt inf_norm(const ExactMatrix& m) {
  BigInt best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt sum = 0;
    for (const auto& x : m.row(i)) sum += abs(x);
    if (sum > best) best = sum;
  }
  return best;
}

BigInt entry_sum(const ExactMatrix& m) {
  BigInt sum = 0;
  for (const auto& x : m.entries()) sum += x;
  return sum;
}

bool is_antidiagonal(const ExactMatrix& m) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i + j != n - 1 && m(i, j) != 0) return false;
    }
  }
  return true;
}

BigInt det(const ExactMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ExactMatrix work = m;
  int swap_sign = 1;
  if (bareiss(work, swap_sign) < n) return 0;
  return swap_sign > 0 ? work(n - 1, n - 1) : BigInt(-work(n - 1, n - 1));
}

std::size_t rank(const ExactMatrix& m) {
  ExactMatrix work = m;
  int swap_sign = 1;
  return bareiss(work, swap_sign);
}

RationalMatrix inverse_rational(const ExactMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  RationalMatrix a = to_rational(m);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

IntPolynomial char_poly(const ExactMatrix& m) {
  require_square(m, "char_poly");
  const std::size_t n = m.rows();
  // coeffs[k] multiplies x^k; the polynomial is monic of degree n.
  std::vector<BigInt> coeffs(n + 1);
  coeffs[n] = 1;
  ExactMatrix running(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
    running = matmul(m, running);
    for (std::size_t i = 0; i < n; ++i) running(i, i) += coeffs[n - k + 1];
    const BigInt t = trace(matmul(m, running));
    coeffs[n - k] = -exact_div(t, BigInt(k), "Faddeev-LeVerrier coefficient");
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace hosoya
