#pragma once

#include <optional>
#include <vector>

#include "ihull/certify.hpp"
#include "ihull/model.hpp"

namespace ihull {

/// Complete set of lattice points of P within provably valid bounds.
struct LatticeCloud {
  std::vector<IntPoint> points;
  IntVec bounds_used;
  bool complete = false;
};

/// Per-variable upper bounds valid for every feasible x, when derivable
/// (a row with single-sign coefficients caps each of its variables; user
/// bounds are honored). Absent when P may be unbounded.
std::optional<IntVec> derive_var_bounds(const Instance& inst);

/// Every lattice point of P via DFS with exact residual-interval pruning.
/// Refuses (rather than truncating) without bounds or past max_points.
LatticeCloud enumerate_lattice(const Instance& inst, long max_points = 2000000);

struct OracleOptions {
  /// Above this cloud size, candidates are pruned by the kernel
  /// certificate (a necessary vertex condition) before the exact LP
  /// test; the result set is unchanged. Set to < 0 to disable.
  long prefilter_threshold = 512;
  int workers = 1;
};

/// Exact vertex set of P_I: { p in cloud : p not in conv(cloud \ p) }.
std::vector<IntPoint> hull_vertices_oracle(const LatticeCloud& cloud,
                                           const Instance& inst,
                                           const OracleOptions& opts = {});

/// Among lattice points optimizing c (min by default), one of minimal
/// support, plus that support size. Throws on an infeasible instance.
std::pair<IntPoint, int> min_support_optimum(const Instance& inst,
                                             const IntVec& c,
                                             bool maximize = false);

}  // namespace ihull
