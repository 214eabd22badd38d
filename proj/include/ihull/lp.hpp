#pragma once

#include <vector>

#include "ihull/linalg.hpp"
#include "ihull/model.hpp"

namespace ihull::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  BigRat objective;
  RatVec x;  // structural variables, valid when Optimal
};

/// min c.x  subject to  E x = f,  x >= 0, in exact rational arithmetic.
///
/// Two-phase dense tableau simplex. Bland's rule on both phases, so the
/// method terminates on degenerate systems without perturbation.
/// Redundant rows surviving phase 1 are dropped.
Result solve(const RatMatrix& E, const RatVec& f, const RatVec& c);

/// Phase-1 only: does { x >= 0 : E x = f } have a solution?
bool feasible(const RatMatrix& E, const RatVec& f);

}  // namespace ihull::lp
