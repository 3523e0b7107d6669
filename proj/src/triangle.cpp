#include "hosoya/triangle.hpp"

#include "hosoya/errors.hpp"

#include <algorithm>
#include <string>

namespace hosoya {
namespace {

void require_positive(std::int64_t value, const char* name) {
  if (value < 1) {
    throw DomainError(std::string(name) + " must be >= 1, got " +
                      std::to_string(value));
  }
}

std::size_t idx(std::int64_t one_based) {
  return static_cast<std::size_t>(one_based - 1);
}

}  // namespace

const char* to_string(SliceKind kind) {
  switch (kind) {
    case SliceKind::kRow: return "row";
    case SliceKind::kSlash: return "slash";
    case SliceKind::kBackslash: return "backslash";
    case SliceKind::kMedian: return "median";
  }
  return "unknown";
}

std::vector<BigInt> TriangleSlice::values() const {
  std::vector<BigInt> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.value);
  return out;
}

TriangleSlice row(std::int64_t r, const SeedPair& seed) {
  require_positive(r, "row index");
  const auto g = generalized_fib_range(seed, 1, r);
  TriangleSlice slice{SliceKind::kRow, r, {}};
  slice.points.reserve(g.size());
  for (std::int64_t k = 1; k <= r; ++k) {
    slice.points.push_back({r, k, g[idx(k)] * g[idx(r - k + 1)]});
  }
  return slice;
}

TriangleSlice backslash_diagonal(std::int64_t m, std::int64_t len,
                                 const SeedPair& seed) {
  require_positive(m, "diagonal index");
  require_positive(len, "length");
  const auto g = generalized_fib_range(seed, 1, std::max(m, len));
  TriangleSlice slice{SliceKind::kBackslash, m, {}};
  for (std::int64_t j = 0; j < len; ++j) {
    slice.points.push_back({m + j, m, g[idx(m)] * g[idx(j + 1)]});
  }
  return slice;
}

TriangleSlice slash_diagonal(std::int64_t n, std::int64_t len,
                             const SeedPair& seed) {
  require_positive(n, "diagonal index");
  require_positive(len, "length");
  const auto g = generalized_fib_range(seed, 1, std::max(n, len));
  TriangleSlice slice{SliceKind::kSlash, n, {}};
  for (std::int64_t j = 0; j < len; ++j) {
    slice.points.push_back({n + j, j + 1, g[idx(j + 1)] * g[idx(n)]});
  }
  return slice;
}

TriangleSlice median(std::int64_t len, const SeedPair& seed) {
  require_positive(len, "length");
  const auto g = generalized_fib_range(seed, 1, len);
  TriangleSlice slice{SliceKind::kMedian, 1, {}};
  for (std::int64_t i = 1; i <= len; ++i) {
    slice.points.push_back({2 * i - 1, i, g[idx(i)] * g[idx(i)]});
  }
  return slice;
}

HosoyaTriangle::HosoyaTriangle(std::int64_t rows, const SeedPair& seed) {
  require_positive(rows, "row count");
  const BigInt& a = seed.a();
  const BigInt& b = seed.b();
  rows_.resize(static_cast<std::size_t>(rows));
  for (std::int64_t r = 1; r <= rows; ++r) {
    auto& current = rows_[idx(r)];
    current.resize(static_cast<std::size_t>(r));
    for (std::int64_t k = 1; k <= r; ++k) {
      BigInt& cell = current[idx(k)];
      if (r == 1) {
        cell = a * a;
      } else if (r == 2) {
        cell = a * b;
      } else if (r == 3 && k == 2) {
        cell = b * b;
      } else if (k <= r - 2) {
        cell = rows_[idx(r - 1)][idx(k)] + rows_[idx(r - 2)][idx(k)];
      } else {
        cell = rows_[idx(r - 1)][idx(k - 1)] + rows_[idx(r - 2)][idx(k - 2)];
      }
    }
  }
}

const BigInt& HosoyaTriangle::at(std::int64_t r, std::int64_t k) const {
  if (r < 1 || r > rows() || k < 1 || k > r) {
    throw DomainError("triangle position (" + std::to_string(r) + ", " +
                      std::to_string(k) + ") is outside the materialized rows");
  }
  return rows_[idx(r)][idx(k)];
}

const std::vector<BigInt>& HosoyaTriangle::row_values(std::int64_t r) const {
  if (r < 1 || r > rows()) {
    throw DomainError("row " + std::to_string(r) + " is not materialized");
  }
  return rows_[idx(r)];
}

}  // namespace hosoya
