#pragma once

#include <cstdint>
#include <vector>

#include "ihull/model.hpp"

namespace ihull {

enum class SampleLaw {
  TwoPoint,    // Y_i is the box's lower or upper corner, probability 1/2 each
  UniformBox,  // each coordinate uniform in its interval, independently
};

/// n independent m-dimensional bounded random vectors Y_i with
/// Pr[Y_i[j] in [lower[i][j], upper[i][j]]] = 1.
struct BoundedVectorFamily {
  int n = 0, m = 0;
  std::vector<RatVec> lower, upper;  // n x m
  SampleLaw law = SampleLaw::TwoPoint;

  /// The random process behind the general support bound: Y_i = +-A_i/2,
  /// i.e. boxes [-|A_ji|/2, |A_ji|/2] per coordinate.
  static BoundedVectorFamily from_matrix_columns(const IntMatrix& A);
  /// n variables with every coordinate box [-half, +half].
  static BoundedVectorFamily symmetric(int n, int m, const BigRat& half);

  void validate() const;
  /// E[sum Y_i], exact: coordinatewise sum of (l+u)/2.
  RatVec mean() const;
};

/// (T, D): the additive threshold T = 1.12 sum_j sqrt(sum_i (u_i[j]-l_i[j])^2)
/// and exponent denominator D = sum_i [sum_j (u_i[j]-l_i[j])]^2, so the tail
/// claim reads Pr[ |Y-mu|_1 >= T + delta ] <= 2 exp(-2 delta^2 / D).
/// Both rounded up, which only weakens the asserted bound.
struct VectorThresholds {
  HPReal T, D;
};
VectorThresholds hoeffding_vector_threshold(const BoundedVectorFamily& fam);

/// 2 exp(-2 delta^2 / sum w_i^2); the degenerate all-zero-width family gives
/// 0 for delta > 0 (the deviation is 0 almost surely) and 2 at delta = 0.
HPReal scalar_hoeffding_bound(const std::vector<BigRat>& widths,
                              const HPReal& delta);

/// 2 exp(-2 delta^2 / sum c_i^2), c_i >= 0.
HPReal mcdiarmid_bound(const std::vector<BigRat>& cs, const HPReal& delta);

struct TailPoint {
  double delta_mult = 0;  // delta = delta_mult * sqrt(D)
  HPReal delta;
  HPReal theoretical;  // 2 exp(-2 delta^2 / D), rounded up
  long hits = 0;
  double frequency = 0;
  double stderr_ = 0;  // binomial
};

struct TailReport {
  VectorThresholds thresholds;
  std::vector<TailPoint> grid;
  long samples = 0;
  uint64_t seed = 0;
  double mean_l1 = 0;         // Monte Carlo mean of |Y - mu|_1
  double mean_stderr = 0;
  HPReal expectation_bound;   // 1.12 sqrt(D), the appendix claim applied to it
};

/// Monte Carlo tail of |Y - mu|_1 >= T + delta over the delta grid
/// (multipliers of sqrt(D)). Deterministic per (seed); counts are identical
/// for every worker count.
TailReport mc_tail(const BoundedVectorFamily& fam,
                   const std::vector<double>& delta_mults, long samples,
                   uint64_t seed, int workers = 1);

/// min over the alpha grid of (alpha + exp(-2 alpha^2)/alpha) * sqrt(b);
/// the claim asserts the minimum stays below 1.12 sqrt(b).
struct ExpectationCheck {
  HPReal factor;       // grid minimum of alpha + exp(-2 alpha^2)/alpha
  HPReal value;        // factor * sqrt(b)
  HPReal at_alpha_09;  // the paper's alpha = 0.9 evaluation
  bool within_claim = false;
};
ExpectationCheck expectation_claim_check(const HPReal& b,
                                         const std::vector<BigRat>& alpha_grid);

/// Golden-section minimum of f(alpha) = 2 alpha / (1 - 2 exp(2 - 2 alpha^2))
/// on the denominator-positive part of [lo, hi]; reproduces the 3.51
/// constant. `tail_form` minimizes 2 alpha / (1 - 2 exp(-2 alpha^2)) instead
/// (the exponent printed by the underlying tail bound).
struct MinimizeResult {
  HPReal min_value, argmin;
};
MinimizeResult thm4_constant(double lo = 1.0, double hi = 3.0,
                             double tol = 1e-8, bool tail_form = false);

}  // namespace ihull
