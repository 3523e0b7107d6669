#pragma once

#include "hosoya/fib.hpp"
#include "hosoya/scalar.hpp"

#include <cstdint>
#include <vector>

namespace hosoya {

struct TrianglePoint {
  std::int64_t r = 1;
  std::int64_t k = 1;
  BigInt value;

  friend bool operator==(const TrianglePoint&, const TrianglePoint&) = default;
};

enum class SliceKind { kRow, kSlash, kBackslash, kMedian };

const char* to_string(SliceKind kind);

// An ordered run of triangle points along one coordinate direction.
struct TriangleSlice {
  SliceKind kind = SliceKind::kRow;
  std::int64_t start = 1;
  std::vector<TrianglePoint> points;

  std::vector<BigInt> values() const;
};

// Row r: H_{r,1}, ..., H_{r,r}.
TriangleSlice row(std::int64_t r, const SeedPair& seed = SeedPair::classic());

// The m-th backslash diagonal: H_{m+j, m} = G_m G_{j+1} for j = 0..len-1.
TriangleSlice backslash_diagonal(std::int64_t m, std::int64_t len,
                                 const SeedPair& seed = SeedPair::classic());

// The n-th slash diagonal, mirror of the backslash one:
// H_{n+j, j+1} = G_{j+1} G_n.
TriangleSlice slash_diagonal(std::int64_t n, std::int64_t len,
                             const SeedPair& seed = SeedPair::classic());

// The central vertical H_{2i-1, i} = G_i^2 for i = 1..len.
TriangleSlice median(std::int64_t len,
                     const SeedPair& seed = SeedPair::classic());

/// The first `rows` rows of the triangle, materialized with the two
/// Fibonacci-style recurrences
///   H(r,k) = H(r-1,k) + H(r-2,k)   and   H(r,k) = H(r-1,k-1) + H(r-2,k-2)
/// from the four seed entries H(1,1), H(2,1), H(2,2), H(3,2). This is the
/// recursive route; the slice functions above use the product closed form.
class HosoyaTriangle {
 public:
  explicit HosoyaTriangle(std::int64_t rows,
                          const SeedPair& seed = SeedPair::classic());

  std::int64_t rows() const { return static_cast<std::int64_t>(rows_.size()); }

  // 1-based access, 1 <= k <= r <= rows().
  const BigInt& at(std::int64_t r, std::int64_t k) const;

  const std::vector<BigInt>& row_values(std::int64_t r) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

}  // namespace hosoya
