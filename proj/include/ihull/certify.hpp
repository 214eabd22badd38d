#pragma once

#include <optional>
#include <vector>

#include "ihull/lp.hpp"
#include "ihull/model.hpp"

namespace ihull {

/// A nonzero x in {-1,0,1}^n supported inside supp(v) with A x = 0.
/// Its existence refutes vertexhood of v: v-x and v+x are feasible and
/// v = (v-x)/2 + (v+x)/2.
struct KernelWitness {
  IntPoint x;
};

struct CertifyOptions {
  int max_support = 25;     // search budget
  int mitm_threshold = 15;  // supports larger than this use meet-in-the-middle
};

/// Decide whether A x = 0, x in {-1,0,1} on supp(v), x = 0 elsewhere has a
/// nonzero solution. A witness proves v is NOT a vertex; no witness means
/// the necessary condition passes (never a proof of vertexhood).
///
/// Requires v >= 0 and A v = b. Plain DFS with residual pruning up to the
/// meet-in-the-middle threshold; above it, one half of the sign patterns is
/// hashed by its image A.x and the other half probes negated sums.
std::optional<KernelWitness> kernel_certificate(const Instance& inst,
                                                const IntPoint& v,
                                                const CertifyOptions& opts = {});

/// True iff w is not a convex combination of the other points: the LP
///   w = sum lambda_p p,  sum lambda_p = 1,  lambda >= 0   (p != w)
/// is infeasible, decided by exact rational phase-1 simplex.
bool is_vertex_exact(const std::vector<IntPoint>& points, const IntPoint& w);

}  // namespace ihull
