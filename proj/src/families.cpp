#include "hosoya/families.hpp"

#include "hosoya/errors.hpp"

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

}  // namespace

ExactMatrix backslash_matrix(std::int64_t m, std::int64_t n, std::int64_t t,
                             const SeedPair& seed) {
  if (m < 1 || n < 1 || t < 1 || m > n || t > n) {
    throw DomainError("backslash matrix B(" + std::to_string(m) + "," +
                      std::to_string(n) + "," + std::to_string(t) +
                      ") requires positive parameters with m <= n and t <= n");
  }
  const auto rows = generalized_fib_range(seed, m, m + t - 1);
  const auto cols = generalized_fib_range(seed, n - t + 1, n);
  ExactMatrix out(idx(t + 1), idx(t + 1));
  for (std::int64_t i = 1; i <= t; ++i) {
    for (std::int64_t j = 1; j <= t; ++j) {
      // G_{n-j+1} is cols[(n-j+1) - (n-t+1)] = cols[t-j].
      out(idx(i), idx(j)) = rows[idx(i)] * cols[static_cast<std::size_t>(t - j)];
    }
  }
  return out;
}

ExactMatrix persymmetric(std::int64_t n) {
  require_size(n, "persymmetric");
  return backslash_matrix(1, n, n);
}

ExactMatrix antidiagonal_A(std::int64_t n) {
  require_size(n, "antidiagonal_A");
  ExactMatrix out(idx(n + 1), idx(n + 1));
  for (std::int64_t i = 1; i <= n; ++i) {
    const BigInt f = fib(i);
    out(idx(i), idx(n - i + 1)) = f * f;
  }
  return out;
}

ExactMatrix skew_band(std::int64_t n, std::int64_t lo) {
  if (n < 2) {
    throw DomainError("skew_band requires n >= 2, got " + std::to_string(n));
  }
  if (lo > n + 1) {
    throw DomainError("skew_band lower bound " + std::to_string(lo) +
                      " exceeds n+1 = " + std::to_string(n + 1));
  }
  ExactMatrix out(idx(n + 1), idx(n + 1));
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 1; j <= n; ++j) {
      const std::int64_t s = i + j;
      if (s >= lo && s <= n + 1) out(idx(i), idx(j)) = fib(i) * fib(n - j + 1);
    }
  }
  return out;
}

}  // namespace hosoya
