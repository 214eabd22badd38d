#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ihull/model.hpp"

namespace ihull {

enum class Provenance { Exact, RoundedUp, RoundedDown, MonteCarlo };

std::string provenance_name(Provenance p);

/// One named bound value. Upper bounds are rounded up so dominance checks
/// against exact quantities are rigorous.
struct BoundEntry {
  std::string tag;
  HPReal value;
  bool applicable = true;
  std::string note;             // violated condition when inapplicable
  Provenance prov = Provenance::RoundedUp;
  std::string exact;            // decimal value when prov == Exact
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  const BoundEntry* find(const std::string& tag) const;
};

// ---- knapsack (m = 1) bounds ------------------------------------------

/// log2(||a||_1) + 1, rounded up. Throws on the zero vector.
HPReal knapsack_pigeonhole(const IntVec& a);

/// log2(3.51 * ||a[S]||_2), rounded up; the norm comes from the exact
/// squared norm. Throws on an empty or zero restriction.
HPReal knapsack_l2_bound(const IntVec& a, const IndexSet& S);

/// (3/2) * log2(2.4 * Delta), rounded up. Requires Delta >= 1.
HPReal knapsack_delta_bound(const BigInt& Delta);

/// Largest real s with s <= log2(3.51 sqrt(s) Delta), bracketed by
/// bisection (g is increasing past s = 1), plus the closed form
/// log2(2 Delta sqrt(1.5 log2(2 Delta))).
struct KnapsackImplicit {
  HPReal root;         // upper end of the final bracket, rounded up
  HPReal root_lo;      // lower end
  HPReal closed_form;  // rounded up
};
KnapsackImplicit knapsack_implicit_bound(const BigInt& Delta);

// ---- general-m bounds ---------------------------------------------------

/// Gamma = 1.12 sum_j ||a^(j)||_2 + sqrt(sum_i ||A_i||_1^2) over A[S].
HPReal general_gamma(const IntMatrix& A, const IndexSet& S);

/// m * log2(2 e Gamma / m + 2 e) with Gamma over A[S].
HPReal general_supp_bound(const IntMatrix& A, const IndexSet& S);

enum class GeneralDeltaVariant { ImplicitRoot, Corollary24, Warmup };

/// ImplicitRoot: largest s with s <= m log2(4.24 e sqrt(s) Delta + 2e).
/// Corollary24:  2 m log2(24 sqrt(m) Delta).
/// Warmup(eps):  (1+eps) m log2(4.24 e (1+1/Delta) sqrt((1+eps)/(2eps)) sqrt(m) Delta).
HPReal general_delta_bound(int m, const BigInt& Delta, GeneralDeltaVariant v,
                           const BigRat& eps = BigRat(1));

/// m * log2(s * Delta + 1).
HPReal pigeonhole_general(int m, const BigInt& s, const BigInt& Delta);

/// sum over the rows a_j of A[S] of log2(||a_j||_1 + 1).
HPReal simple_related(const IntMatrix& A, const IndexSet& S);

// ---- structure bounds (appendix) ---------------------------------------

/// min over real coefficients of || a_k - sum lambda_i basis_i ||_1,
/// computed exactly by a split-variable rational LP. Empty basis gives
/// ||a_k||_1.
BigRat structure_distance(const IntVec& a_k, const std::vector<IntVec>& basis);

/// min over row orders pi of sum_i log2(d_i^pi + 1), where d_1 is the
/// leading row's l1 norm and d_{i+1} = ceil(distance to the span of the
/// earlier rows). Evaluated as log2 of the exact minimal product, via a
/// subset DP (the distance depends on the set, not the order).
struct StructureBound {
  HPReal log_bound;        // rounded up
  BigInt product;          // exact min over pi of prod (d_i + 1)
  std::vector<int> order;  // an optimal row order
};
StructureBound structure_bound(const IntMatrix& A, int max_m = 9);

/// m + m log2(m) + (1/2) log2(det(A A^T)), det exact via fraction-free
/// elimination of the integer Gram matrix. Throws when A is row-rank
/// deficient.
HPReal minkowski_bound(const IntMatrix& A);

// ---- vertex-count bounds -------------------------------------------------

struct VertexCountBounds {
  long ell = 0;            // ceil((3/2) log2(2.4 Delta))
  long d = 0;              // ceil(log2(8 (2 Delta + 1)))
  BigInt knapsack_count;   // ell * (n*d)^(ell+1), exact
  HPReal general_count;    // the general-m explicit product, rounded up
  HPReal general_ell;      // 2 m log2(24 sqrt(m) Delta)
};
VertexCountBounds vertex_count_bounds(int n, int m, const BigInt& Delta);

// ---- inequality analysis (appendix C) -----------------------------------

/// Real root Y* >= m log2(cD) of Y - (m/2) log2(Y) = m log2(cD), by
/// bisection on a bracket where the left side is strictly increasing, plus
/// the smallest integer Y with the strict inequality (decided exactly by
/// comparing 2^(2Y) q^(2m) with Y^m p^(2m) for cD = p/q).
struct MinimalY {
  HPReal root;     // upper end of the bracket, rounded up
  HPReal root_lo;  // lower end
  BigInt integer_min;
};
MinimalY minimal_Y(int m, const BigRat& cDelta);

struct IneqCase {
  int case_id = 0;  // 1..4
  int m = 0;
  HPReal cDelta;
  HPReal bound;  // rounded up
};

/// Case table evaluated in order; conditions decided rigorously (directed
/// 128-bit enclosures with exact rational fallback at ties), ties resolved
/// toward the later case. Requires cDelta >= 2.
IneqCase ineq_table_bound(int m, const BigRat& cDelta);
IneqCase ineq_table_bound(int m, const BigRat& c, const BigInt& Delta);

/// (3/2) m log2(2.3514 c Delta sqrt(m)).
HPReal ineq_uniform_bound(int m, const BigRat& cDelta);
HPReal ineq_uniform_bound(int m, const BigRat& c, const BigInt& Delta);

/// Sign of sqrt(x) - log2(x): -1, 0, +1 (0 only when provably equal).
int sqrt_log_crossover(const HPReal& x);

// ---- roots ---------------------------------------------------------------

/// Bisection on an increasing g with g(lo) <= 0 <= g(hi); the returned
/// bracket has width < 2^-70 so the residual at the root is < 2^-64.
struct Bracket {
  HPReal lo, hi;
};
Bracket bisect_increasing(const std::function<HPReal(const HPReal&)>& g,
                          HPReal lo, HPReal hi);

/// ceil of a bound evaluated with both rounding directions; the two ceilings
/// agree unless the exact value sits on an integer, in which case the larger
/// (safe) one is returned.
long ceil_to_long(const HPReal& lo, const HPReal& hi);

// ---- aggregation ----------------------------------------------------------

/// Evaluate every applicable bound for the instance over support set S
/// (inapplicable entries carry the violated condition).
BoundReport evaluate_all_bounds(const Instance& inst, const IndexSet& S,
                                const BigRat& eps = BigRat(1));

}  // namespace ihull
