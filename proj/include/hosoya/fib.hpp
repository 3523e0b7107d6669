#pragma once

#include "hosoya/scalar.hpp"

#include <cstdint>
#include <vector>

namespace hosoya {

// Largest |k| accepted by fib/lucas. Larger indices raise RangeError.
struct IndexCap {
  std::int64_t value = 10'000;
};

inline constexpr IndexCap kDefaultIndexCap{};

// Initial terms (a, b) of a generalized Fibonacci sequence G with G_1 = a,
// G_2 = b. The classic seed (1, 1) yields the Fibonacci numbers.
class SeedPair {
 public:
  SeedPair() = default;
  SeedPair(BigInt a, BigInt b);

  static SeedPair classic() { return {}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  bool is_classic() const { return a_ == 1 && b_ == 1; }

  friend bool operator==(const SeedPair&, const SeedPair&) = default;

 private:
  BigInt a_ = 1;
  BigInt b_ = 1;
};

// F_k with F_0 = 0, F_1 = 1 and F_{-k} = (-1)^{k+1} F_k.
BigInt fib(std::int64_t k, IndexCap cap = kDefaultIndexCap);

// L_k with L_0 = 2, L_1 = 1 and L_{-k} = (-1)^k L_k.
BigInt lucas(std::int64_t k, IndexCap cap = kDefaultIndexCap);

// G_k for the given seed, extended to k <= 0 by G_{k} = G_{k+2} - G_{k+1}.
BigInt generalized_fib(const SeedPair& seed, std::int64_t k,
                       IndexCap cap = kDefaultIndexCap);

// G_first, ..., G_last (inclusive). Empty when last < first.
std::vector<BigInt> generalized_fib_range(const SeedPair& seed,
                                          std::int64_t first,
                                          std::int64_t last,
                                          IndexCap cap = kDefaultIndexCap);

// Entry H_{r,k} = F_k F_{r-k+1} of the Hosoya triangle, 1 <= k <= r.
BigInt hosoya(std::int64_t r, std::int64_t k);

// Entry of the triangle grown from H_{1,1} = a^2, H_{2,1} = H_{2,2} = ab,
// H_{3,2} = b^2; equals G_k G_{r-k+1}.
BigInt hosoya_general(const SeedPair& seed, std::int64_t r, std::int64_t k);

}  // namespace hosoya
