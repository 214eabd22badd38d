#pragma once

#include <optional>
#include <vector>

#include "ihull/model.hpp"

namespace ihull {

using RatMatrix = std::vector<std::vector<BigRat>>;

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_det(const IntMatrix& A);

/// Gram matrix A A^T.
IntMatrix gram(const IntMatrix& A);

/// Solve the square rational system M x = rhs; nullopt when singular.
std::optional<RatVec> solve_square(RatMatrix M, RatVec rhs);

/// Rank of a rational matrix by Gaussian elimination.
int rat_rank(RatMatrix M);

/// Row indices of a maximal linearly independent subset of A's rows.
std::vector<int> independent_rows(const IntMatrix& A);

}  // namespace ihull
