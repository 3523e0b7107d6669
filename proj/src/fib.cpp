#include "hosoya/fib.hpp"

#include "hosoya/errors.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>

namespace hosoya {
namespace {

// Grow-only table of F_0..F_N shared by all threads.
class FibTable {
 public:
  BigInt get(std::int64_t k) {
    const auto index = static_cast<std::size_t>(k);
    {
      std::shared_lock lock(mutex_);
      if (index < values_.size()) return values_[index];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= index) {
      const std::size_t n = values_.size();
      values_.push_back(values_[n - 1] + values_[n - 2]);
    }
    return values_[index];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<BigInt> values_{0, 1};
};

FibTable& table() {
  static FibTable instance;
  return instance;
}

void check_cap(std::int64_t k, IndexCap cap, const char* what) {
  if (k > cap.value || k < -cap.value) {
    throw RangeError(std::string(what) + " index " + std::to_string(k) +
                     " exceeds cap " + std::to_string(cap.value));
  }
}

BigInt fib_unchecked(std::int64_t k) {
  if (k >= 0) return table().get(k);
  BigInt value = table().get(-k);
  return parity_sign(k + 1) > 0 ? value : BigInt(-value);
}

void check_position(std::int64_t r, std::int64_t k) {
  if (r < 1 || k < 1 || k > r) {
    throw DomainError("triangle position (" + std::to_string(r) + ", " +
                      std::to_string(k) + ") requires 1 <= k <= r");
  }
}

}  // namespace

SeedPair::SeedPair(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == 0 && b_ == 0) throw DomainError("seed pair (0, 0) is degenerate");
}

BigInt fib(std::int64_t k, IndexCap cap) {
  check_cap(k, cap, "fib");
  return fib_unchecked(k);
}

BigInt lucas(std::int64_t k, IndexCap cap) {
  check_cap(k, cap, "lucas");
  return fib_unchecked(k - 1) + fib_unchecked(k + 1);
}

BigInt generalized_fib(const SeedPair& seed, std::int64_t k, IndexCap cap) {
  return generalized_fib_range(seed, k, k, cap).front();
}

std::vector<BigInt> generalized_fib_range(const SeedPair& seed,
                                          std::int64_t first,
                                          std::int64_t last, IndexCap cap) {
  if (last < first) return {};
  check_cap(first, cap, "generalized fib");
  check_cap(last, cap, "generalized fib");
  if (seed.is_classic()) {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(last - first + 1));
    for (std::int64_t k = first; k <= last; ++k) out.push_back(fib_unchecked(k));
    return out;
  }
  // Walk from the seed (G_1, G_2) to `first`, then collect forward.
  BigInt lo = seed.a();  // G_j
  BigInt hi = seed.b();  // G_{j+1}
  std::int64_t j = 1;
  while (j > first) {
    BigInt prev = hi - lo;
    hi = lo;
    lo = std::move(prev);
    --j;
  }
  while (j < first) {
    BigInt next = lo + hi;
    lo = hi;
    hi = std::move(next);
    ++j;
  }
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  for (; j <= last; ++j) {
    out.push_back(lo);
    BigInt next = lo + hi;
    lo = hi;
    hi = std::move(next);
  }
  return out;
}

BigInt hosoya(std::int64_t r, std::int64_t k) {
  check_position(r, k);
  return fib(k) * fib(r - k + 1);
}

BigInt hosoya_general(const SeedPair& seed, std::int64_t r, std::int64_t k) {
  check_position(r, k);
  if (seed.is_classic()) return hosoya(r, k);
  const auto g = generalized_fib_range(seed, 1, r);
  return g[static_cast<std::size_t>(k - 1)] * g[static_cast<std::size_t>(r - k)];
}

}  // namespace hosoya
