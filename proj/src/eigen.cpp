#include "hosoya/eigen.hpp"

#include "hosoya/errors.hpp"
#include "hosoya/families.hpp"

#include <string>

namespace hosoya {
namespace {

std::size_t idx(std::int64_t one_based) {
  return static_cast<std::size_t>(one_based - 1);
}

void require_size(std::int64_t n, const char* what) {
  if (n < 1) {
    throw DomainError(std::string(what) + " requires n >= 1, got " +
                      std::to_string(n));
  }
}

Vector scaled(const Vector& v, const BigInt& factor) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

void verify(const ExactMatrix& m, const EigenPair& pair, const char* what) {
  if (!is_eigenpair(m, pair)) {
    throw IdentityViolation(std::string(what) + ": eigenpair for " +
                            pair.value.to_string() + " failed exact check");
  }
}

ExactMatrix columns_to_matrix(const std::vector<Vector>& columns) {
  const std::size_t n = columns.empty() ? 0 : columns.front().size();
  ExactMatrix out(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) out(i, j) = columns[j][i];
  }
  return out;
}

}  // namespace

SurdValue SurdValue::root(int sign, BigInt radicand) {
  if (radicand < 0) throw DomainError("negative radicand");
  SurdValue s;
  s.radicand_ = std::move(radicand);
  s.sign_ = s.radicand_ == 0 ? 0 : (sign < 0 ? -1 : 1);
  return s;
}

SurdValue SurdValue::from_integer(const BigInt& value) {
  return root(value.sign(), value * value);
}

std::optional<BigInt> SurdValue::integer_value() const {
  auto r = exact_sqrt(radicand_);
  if (!r) return std::nullopt;
  return sign_ < 0 ? BigInt(-*r) : *r;
}

BigInt SurdValue::signed_square() const {
  return sign_ < 0 ? BigInt(-radicand_) : radicand_;
}

std::string SurdValue::to_string() const {
  if (auto v = integer_value()) return v->str();
  return std::string(sign_ < 0 ? "-" : "") + "sqrt(" + radicand_.str() + ")";
}

bool is_eigenpair(const ExactMatrix& m, const EigenPair& pair) {
  const auto lambda = pair.value.integer_value();
  if (!lambda) return false;
  for (const auto& w : pair.eigenvectors) {
    if (w.size() != m.cols()) return false;
    if (mat_vec(m, w) != scaled(w, *lambda)) return false;
  }
  return true;
}

RankOneFactor rank_one_factor(std::int64_t m, std::int64_t n, std::int64_t t,
                              const SeedPair& seed) {
  // Validates the parameters with the same rules as the matrix.
  if (m < 1 || n < 1 || t < 1 || m > n || t > n) {
    throw DomainError("rank-one factor requires positive m, n, t with m <= n and t <= n");
  }
  RankOneFactor f;
  f.u = generalized_fib_range(seed, m, m + t - 1);
  auto tail = generalized_fib_range(seed, n - t + 1, n);
  f.v.assign(tail.rbegin(), tail.rend());
  return f;
}

std::vector<EigenPair> rank_one_eigen(std::int64_t m, std::int64_t n,
                                      std::int64_t t, const SeedPair& seed) {
  const ExactMatrix b = backslash_matrix(m, n, t, seed);
  const RankOneFactor f = rank_one_factor(m, n, t, seed);
  if (outer(f.u, f.v) != b) {
    throw IdentityViolation("backslash matrix is not u v^T");
  }
  const auto size = static_cast<std::size_t>(t);

  // Null space of u v^T is v^perp (u is never zero for a valid seed).
  std::vector<Vector> null_basis;
  std::size_t pivot = 0;
  while (pivot < size && f.v[pivot] == 0) ++pivot;
  if (pivot == size) {
    for (std::size_t j = 0; j < size; ++j) {
      Vector e(size);
      e[j] = 1;
      null_basis.push_back(std::move(e));
    }
  } else {
    for (std::size_t j = 0; j < size; ++j) {
      if (j == pivot) continue;
      Vector w(size);
      w[pivot] = -f.v[j];
      w[j] = f.v[pivot];
      null_basis.push_back(std::move(w));
    }
  }

  const BigInt tr = trace(b);
  std::vector<EigenPair> pairs;
  if (tr != 0) {
    pairs.push_back({SurdValue::from_integer(tr), 1, {f.u}});
    if (size > 1) pairs.push_back({SurdValue{}, size - 1, std::move(null_basis)});
  } else {
    pairs.push_back({SurdValue{}, size, std::move(null_basis)});
  }
  for (const auto& p : pairs) verify(b, p, "rank_one_eigen");
  return pairs;
}

BigInt persymmetric_trace_closed(std::int64_t n) {
  require_size(n, "persymmetric trace");
  return exact_div(BigInt(n) * lucas(n + 1) + 2 * fib(n), 5,
                   "persymmetric trace closed form");
}

Diagonalization diagonalize_persymmetric(std::int64_t n) {
  require_size(n, "diagonalize_persymmetric");
  const ExactMatrix b = persymmetric(n);
  const auto pairs = rank_one_eigen(1, n, n);
  std::vector<Vector> columns;
  for (const auto& p : pairs) {
    columns.insert(columns.end(), p.eigenvectors.begin(), p.eigenvectors.end());
  }
  Diagonalization out{columns_to_matrix(columns),
                      ExactMatrix(idx(n + 1), idx(n + 1))};
  out.d(0, 0) = persymmetric_trace_closed(n);
  if (out.d(0, 0) != trace(b)) {
    throw IdentityViolation("persymmetric trace closed form disagrees with trace");
  }
  if (matmul(b, out.q) != matmul(out.q, out.d)) {
    throw IdentityViolation("B Q != Q D");
  }
  return out;
}

PowerIdentity check_power_identity(std::int64_t n, unsigned k) {
  if (k < 1) throw DomainError("power identity requires k >= 1");
  const ExactMatrix b = persymmetric(n);
  const Diagonalization diag = diagonalize_persymmetric(n);
  const ExactMatrix bk = matpow(b, k);
  PowerIdentity out;
  out.eigen_form = matmul(bk, diag.q) == matmul(diag.q, matpow(diag.d, k));
  BigInt factor = 1;
  for (unsigned i = 1; i < k; ++i) factor *= diag.d(0, 0);
  out.scalar_form = bk == scale(b, factor);
  return out;
}

std::vector<EigenPair> antidiagonal_eigen(std::int64_t n) {
  require_size(n, "antidiagonal_eigen");
  const ExactMatrix a = antidiagonal_A(n);
  const auto size = static_cast<std::size_t>(n);
  std::vector<EigenPair> pairs;
  for (std::int64_t i = 1; i < n - i + 1; ++i) {
    const std::int64_t j = n - i + 1;
    const BigInt fi = fib(i);
    const BigInt fj = fib(j);
    Vector plus(size);
    Vector minus(size);
    plus[idx(i)] = fi;
    plus[idx(j)] = fj;
    minus[idx(i)] = fi;
    minus[idx(j)] = -fj;
    pairs.push_back({SurdValue::from_integer(fi * fj), 1, {std::move(plus)}});
    pairs.push_back({SurdValue::from_integer(-(fi * fj)), 1, {std::move(minus)}});
  }
  if (n % 2 == 1) {
    const std::int64_t k = (n + 1) / 2;
    const BigInt fk = fib(k);
    Vector e(size);
    e[idx(k)] = 1;
    pairs.push_back({SurdValue::from_integer(fk * fk), 1, {std::move(e)}});
  }
  for (const auto& p : pairs) verify(a, p, "antidiagonal_eigen");
  return pairs;
}

Diagonalization diagonalize_antidiagonal(std::int64_t n) {
  const auto pairs = antidiagonal_eigen(n);
  std::vector<Vector> columns;
  Diagonalization out{{}, ExactMatrix(idx(n + 1), idx(n + 1))};
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    columns.push_back(pairs[c].eigenvectors.front());
    out.d(c, c) = *pairs[c].value.integer_value();
  }
  out.q = columns_to_matrix(columns);
  return out;
}

std::vector<SurdValue> antidiagonal_general_eigen(const ExactMatrix& m) {
  if (!is_antidiagonal(m)) {
    throw DomainError("antidiagonal_general_eigen requires an antidiagonal matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) throw DomainError("antidiagonal_general_eigen requires n >= 1");
  std::vector<SurdValue> values;
  for (std::size_t i = 0; i < n - 1 - i; ++i) {
    const std::size_t j = n - 1 - i;
    const BigInt product = m(i, j) * m(j, i);
    if (product < 0) {
      throw DomainError("antidiagonal pair (" + std::to_string(i + 1) + ", " +
                        std::to_string(j + 1) +
                        ") has a negative product; eigenvalues are not real");
    }
    values.push_back(SurdValue::root(1, product));
    values.push_back(SurdValue::root(-1, product));
  }
  if (n % 2 == 1) {
    const std::size_t c = n / 2;
    values.push_back(SurdValue::from_integer(m(c, c)));
  }
  return values;
}

IntPolynomial antidiagonal_char_poly(std::int64_t n) {
  require_size(n, "antidiagonal_char_poly");
  IntPolynomial p{1};
  for (std::int64_t i = 1; i <= n / 2; ++i) {
    const BigInt lambda = fib(i) * fib(n - i + 1);
    p = p * IntPolynomial(std::vector<BigInt>{-(lambda * lambda), 0, 1});
  }
  if (n % 2 == 1) {
    const BigInt f = fib((n + 1) / 2);
    p = p * IntPolynomial(std::vector<BigInt>{-(f * f), 1});
  }
  return p;
}

GramSpectrum gram_eigen(std::int64_t n) {
  require_size(n, "gram_eigen");
  const ExactMatrix b = persymmetric(n);
  const RankOneFactor f = rank_one_factor(1, n, n);
  const BigInt closed = [&] {
    const BigInt s = fib(n) * fib(n + 1);
    return BigInt(s * s);
  }();

  // B^T B = (u.u) v v^T, so v spans the nonzero eigenspace.
  const ExactMatrix gram = matmul(transpose(b), b);
  if (trace(gram) != closed) {
    throw IdentityViolation("tr(B^T B) != (F_n F_{n+1})^2");
  }
  GramSpectrum out;
  out.gram = {SurdValue::from_integer(closed), 1, {f.v}};
  verify(gram, out.gram, "gram_eigen");

  // B o B = (u o u)(v o v)^T.
  const ExactMatrix c = hadamard(b, b);
  Vector uu(f.u.size());
  for (std::size_t i = 0; i < uu.size(); ++i) uu[i] = f.u[i] * f.u[i];
  out.hadamard = {SurdValue::from_integer(trace(c)), 1, {std::move(uu)}};
  verify(c, out.hadamard, "gram_eigen (Hadamard)");
  return out;
}

}  // namespace hosoya
