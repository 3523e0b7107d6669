#pragma once

#include "hosoya/fib.hpp"
#include "hosoya/matrix.hpp"
#include "hosoya/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hosoya {

// Exact real number sign * sqrt(radicand), radicand >= 0.
class SurdValue {
 public:
  SurdValue() = default;

  // sign * sqrt(radicand). A zero radicand forces sign 0.
  static SurdValue root(int sign, BigInt radicand);
  static SurdValue from_integer(const BigInt& value);

  int sign() const { return sign_; }
  const BigInt& radicand() const { return radicand_; }

  // The integer value when the radicand is a perfect square.
  std::optional<BigInt> integer_value() const;
  bool is_integer() const { return integer_value().has_value(); }

  // value^2 carrying the sign: sign * radicand.
  BigInt signed_square() const;

  SurdValue operator-() const { return root(-sign_, radicand_); }

  // "13", "-8", "sqrt(5)", "-sqrt(5)".
  std::string to_string() const;

  friend bool operator==(const SurdValue&, const SurdValue&) = default;

 private:
  int sign_ = 0;
  BigInt radicand_ = 0;
};

struct EigenPair {
  SurdValue value;
  std::size_t algebraic_multiplicity = 1;
  // Integer eigenvectors, one per dimension of the eigenspace listed.
  std::vector<Vector> eigenvectors;
};

struct Diagonalization {
  ExactMatrix q;  // eigenvector columns
  ExactMatrix d;  // diagonal eigenvalue matrix
};

struct RankOneFactor {
  Vector u;  // G_m, ..., G_{m+t-1}
  Vector v;  // G_n, ..., G_{n-t+1}
};

// True when M w = value * w for every listed eigenvector. Only integer
// eigenvalues can be checked this way; irrational ones return false.
bool is_eigenpair(const ExactMatrix& m, const EigenPair& pair);

// B(m,n,t) = u v^T.
RankOneFactor rank_one_factor(std::int64_t m, std::int64_t n, std::int64_t t,
                              const SeedPair& seed = SeedPair::classic());

/// Eigenstructure of the rank-one backslash matrix B(m,n,t):
///   tr(B) with eigenvector u, and 0 with multiplicity t-1 spanned by
///   v_i = -v_{i+1} e_1 + v_1 e_{i+1} (for the classic seed,
///   [-F_{n-i}, 0, ..., F_n, ..., 0]).
/// If the trace vanishes (possible only with generalized seeds) the matrix
/// is nilpotent and a single zero eigenvalue of multiplicity t is returned.
/// Results are checked by exact multiplication before returning.
std::vector<EigenPair> rank_one_eigen(std::int64_t m, std::int64_t n,
                                      std::int64_t t,
                                      const SeedPair& seed = SeedPair::classic());

// tr(B(n)) by the closed form (n L_{n+1} + 2 F_n) / 5.
BigInt persymmetric_trace_closed(std::int64_t n);

// Q = [u, v_1, ..., v_{n-1}], D = diag(tr B(n), 0, ..., 0); B Q = Q D.
Diagonalization diagonalize_persymmetric(std::int64_t n);

struct PowerIdentity {
  bool eigen_form = false;   // B^k Q == Q D^k
  bool scalar_form = false;  // B^k == tr(B)^{k-1} B
};

// Checks both power identities of B(n) for exponent k >= 1.
PowerIdentity check_power_identity(std::int64_t n, unsigned k);

/// Eigenpairs of antidiagonal_A(n): +-F_i F_{n-i+1} for each mirrored pair
/// i < n-i+1 with eigenvectors F_i e_i +- F_{n-i+1} e_{n-i+1}, ordered
/// i = 1, 2, ... with + before -, followed for odd n by F_k^2 with e_k.
std::vector<EigenPair> antidiagonal_eigen(std::int64_t n);

// A(n) P = P D with P's columns taken from antidiagonal_eigen, in order.
Diagonalization diagonalize_antidiagonal(std::int64_t n);

/// Eigenvalues of an arbitrary antidiagonal integer matrix: for each pair
/// i < n+1-i, +-sqrt(a_{i,n+1-i} a_{n+1-i,i}), then the centre entry for
/// odd n. Throws DomainError if M is not antidiagonal or a product is
/// negative.
std::vector<SurdValue> antidiagonal_general_eigen(const ExactMatrix& m);

// prod_{i <= n/2} (x^2 - F_i^2 F_{n-i+1}^2), times (x - F_{(n+1)/2}^2)
// when n is odd.
IntPolynomial antidiagonal_char_poly(std::int64_t n);

struct GramSpectrum {
  EigenPair gram;      // nonzero eigenpair of B(n)^T B(n)
  EigenPair hadamard;  // nonzero eigenpair of B(n) o B(n)
};

// The unique nonzero eigenvalue of B^T B is (F_n F_{n+1})^2 = tr(B^T B),
// with eigenvector v; that of B o B is its trace, with eigenvector u o u.
GramSpectrum gram_eigen(std::int64_t n);

}  // namespace hosoya
