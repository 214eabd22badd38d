#pragma once

#include <cstdint>

#include "ihull/model.hpp"

namespace ihull {

/// Generator parameters for the lower-bound families, the structured
/// example, and random test instances.
struct FamilySpec {
  enum class Kind { KnapsackPowers, BlockDiagonal, Triangular, Random } kind;
  int d = 1;       // powers per block (KnapsackPowers, BlockDiagonal)
  int m = 1;       // rows (BlockDiagonal, Triangular, Random)
  int n = 1;       // columns (Random)
  long Delta = 1;  // coefficient range (Random)
  uint64_t seed = 0;

  static FamilySpec knapsack_powers(int d);
  static FamilySpec block_diagonal(int m, int d);
  static FamilySpec triangular(int m);
  static FamilySpec random(int n, int m, long Delta, uint64_t seed);
};

/// Build the instance:
///  - knapsack-powers(d): a = (1, 2, ..., 2^(d-1)), b = 2^d - 1, c = a.
///  - block-diagonal(m,d): m copies of that row on the block diagonal,
///    b = (2^d - 1, ...), c the concatenated powers.
///  - triangular(m): lower-triangular all-ones rows; b makes the all-ones
///    point feasible (b_j = j+1).
///  - random(n,m,Delta,seed): entries uniform in [1, Delta], b = A x0 for a
///    small random nonnegative x0 (so P is feasible by construction).
Instance gen(const FamilySpec& spec);

/// Confirm the all-ones point is a vertex of P_I and return it with its
/// support size. Small instances go through the full hull oracle; the
/// power families at larger d use an exact uniqueness certificate instead
/// (all-ones is the unique minimizer of sum x_i, shown by exhausting the
/// augmented systems {Ax = b, sum x = t} for t up to n).
std::pair<IntPoint, int> verify_family_vertex(const FamilySpec& spec,
                                              long oracle_budget = 2000000);

}  // namespace ihull
