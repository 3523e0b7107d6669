#pragma once

// Matrix families read off the Hosoya triangle. Parameters are the 1-based
// quantities used to describe the triangle; the returned matrices use the
// 0-based indexing of Matrix.
//
// Slash matrices have no constructor of their own: reading along slash
// diagonals gives transpose(backslash_matrix(...)) with rows and columns
// reversed.

#include "hosoya/fib.hpp"
#include "hosoya/matrix.hpp"

#include <cstdint>

namespace hosoya {

/// The t x t backslash matrix whose (1,1) entry sits where the m-th
/// backslash and n-th slash diagonals meet. Entry (i,j), 1-based, is
/// H_{m+n+i-j-1, m+i-1} = G_{m+i-1} G_{n-j+1}. Requires 1 <= m, t <= n.
ExactMatrix backslash_matrix(std::int64_t m, std::int64_t n, std::int64_t t,
                             const SeedPair& seed = SeedPair::classic());

// B(n) = backslash_matrix(1, n, n), symmetric about its antidiagonal.
ExactMatrix persymmetric(std::int64_t n);

// n x n with F_i^2 at (i, n-i+1) and zero elsewhere.
ExactMatrix antidiagonal_A(std::int64_t n);

/// Entry (i,j) = F_i F_{n-j+1} when lo <= i+j <= n+1, else 0.
/// For 2 <= lo <= n+1 this is the skew-triangular family; lo below 2 is
/// accepted and behaves like lo = 2. skew_band(n, n+1) == antidiagonal_A(n).
ExactMatrix skew_band(std::int64_t n, std::int64_t lo);

}  // namespace hosoya
