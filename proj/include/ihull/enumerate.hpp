#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ihull/model.hpp"

namespace ihull {

/// One cell of the dyadic decomposition around a basic feasible solution:
/// coordinate i spans [L_i, L_i+1) when k_i = 0 and
/// [L_i + 2^(k_i - 1), L_i + 2^(k_i)) when k_i >= 1. Cells with distinct k
/// are disjoint.
struct BoxDescriptor {
  std::vector<int> k;  // entries in [0, d]
  IntVec L;            // lower corner, componentwise >= 0
  int d = 0;

  /// Inclusive integer range of coordinate i within the cell.
  std::pair<BigInt, BigInt> coord_range(int i) const;
};

struct HullResult {
  std::vector<IntPoint> vertices;
  long candidates_considered = 0;  // singleton-box points before the LP filter
  long boxes_probed = 0;
  long bfs_used = 0;
  bool infeasible = false;
  bool unbounded_warning = false;
};

/// Every basic feasible solution of {Ax = b, x >= 0}: for each nonsingular
/// m-column basis solve exactly and keep nonnegative solutions. Distinct
/// points only. Empty when the LP is infeasible.
std::vector<RatVec> enumerate_bfs(const Instance& inst);

/// l1 proximity radius between an integer-hull vertex and some optimal
/// basic feasible solution: 2 Delta + 1 for m = 1, else m (2 m Delta + 1)^m.
BigInt proximity_radius(const Instance& inst);

/// Stream the descriptors with entries in [0, d], d = ceil(log2(8R)),
/// support <= ell, whose cell meets the l1-ball of radius R around y
/// intersected with the nonnegative orthant. The corner is
/// L_i = max(ceil(y_i - R), 0). Return false from the visitor to stop.
void box_grid(const RatVec& y, const BigInt& R, int ell,
              const std::function<bool(const BoxDescriptor&)>& visit);

/// Extra inequality for the uniqueness probe: force
/// x[coord] <= base[coord] - 1 (direction -1) or >= base[coord] + 1 (+1).
struct SecondProbe {
  const IntPoint* base = nullptr;
  int coord = 0;
  int direction = 0;
};

/// An integer point of P inside the cell (respecting the probe constraint
/// when given), or nullopt. Coordinates with k_i = 0 are pinned to L_i; the
/// free coordinates are searched depth-first with exact interval
/// propagation on every residual constraint.
std::optional<IntPoint> box_integer_search(const Instance& inst,
                                           const BoxDescriptor& box,
                                           const SecondProbe* probe = nullptr);

struct EnumerateOptions {
  int max_n = 12;
  long max_boxes = -1;  // < 0: unlimited
  int workers = 1;
};

/// Full vertex enumeration: per BFS, probe each box, keep cells holding
/// exactly one integer point (at most 2|supp(k)|+1 probes each), and filter
/// the collected candidates by the exact convex-combination LP.
HullResult enumerate_vertices(const Instance& inst,
                              const EnumerateOptions& opts = {});

}  // namespace ihull
