#pragma once

#include "hosoya/check.hpp"
#include "hosoya/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hosoya {

/// Closed-form trace of B(m,n,t):
///   [t L_{m+n} + (-1)^{n-t} F_{m-n+2t-1} + (-1)^{m-1} F_{n-m+1}] / 5
/// The division by five is checked for exactness. Requires 1 <= m, t <= n.
BigInt trace_closed(std::int64_t m, std::int64_t n, std::int64_t t);

// sum_{i=0}^{t-1} F_{m+i} F_{n-i}, summed term by term.
BigInt convolution_brute(std::int64_t m, std::int64_t n, std::int64_t t);

// sum_{i=0}^{t} F_{m+i} F_{n-i}  vs
// [(t+1) L_{m+n} - sum_{i=0}^{t} (-1)^{n-i} L_{m-n+2i}] / 5.   (t >= 0)
IdentityCheck lemma1a(std::int64_t m, std::int64_t n, std::int64_t t);

// sum_{i=0}^{t-1} (-1)^{n-i-1} L_{m-n+2i}  vs
// (-1)^{n-t} F_{m-n+2t-1} + (-1)^{m-1} F_{n-m+1}.
IdentityCheck lemma1b(std::int64_t m, std::int64_t n, std::int64_t t);

/// Norms and sums of the persymmetric B(n) and its Gram matrix B^T B.
struct NormReport {
  std::int64_t n = 0;
  BigInt lambda;            // tr(B^T B), the nonzero eigenvalue
  BigInt sqrt_lambda;       // exact square root of lambda
  BigInt two_norm;          // sqrt of the spectral radius of B^T B
  BigInt inf_norm;          // max absolute row sum of B
  BigInt sum_sq;            // sum_i F_i^2 along the median
  BigInt sum_all;           // sum of all entries of B
  BigInt fib_sum;           // sum_i F_i
  BigInt antidiagonal_sum;  // sum of the antidiagonal of B
};

// Computes every field from the matrices and checks the seven norm
// relations against their Fibonacci closed forms. Throws IdentityViolation
// if any relation fails.
NormReport norm_report(std::int64_t n);

// +prod F_i^2 when n = 0, 1 (mod 4), otherwise -prod F_i^2. n >= 2.
BigInt det_sign_closed(std::int64_t n);

struct RangeSpec {
  std::string identity;
  std::int64_t max_n = 0;
  // Upper bound for t where the identity has one; defaults to max_n.
  std::optional<std::int64_t> max_t;
};

// Names accepted by verify_range.
const std::vector<std::string>& registered_identities();

/// Exhaustive sweep over the parameter grid for one identity:
///   trace       1 <= m, t <= n <= max_n (t <= max_t)
///   lemma1a     1 <= m, n <= max_n, 0 <= t <= max_t
///   lemma1b     1 <= m, n <= max_n, 1 <= t <= max_t
///   det_sign    2 <= n <= max_n, 2 <= lo <= n+1
///   norm        1 <= n <= max_n
///   diag_trace  1 <= n <= max_n
///   structure   n = 3k+2 <= max_n
/// Grid points are evaluated in parallel; the result is in grid order.
/// Throws UsageError for an unknown identity.
std::vector<IdentityCheck> verify_range(const RangeSpec& spec);

}  // namespace hosoya
