#include "ihull/oracle.hpp"

#include <algorithm>

#include "ihull/parallel.hpp"

namespace ihull {

std::optional<IntVec> derive_var_bounds(const Instance& inst) {
  inst.validate();
  int n = inst.n(), m = inst.m();
  IntVec ub(n, BigInt(-1));  // -1 = unknown
  if (inst.var_upper_bounds)
    for (int i = 0; i < n; ++i) ub[i] = (*inst.var_upper_bounds)[i];

  auto tighten = [&](int i, const BigInt& cap) {
    if (ub[i] < 0 || cap < ub[i]) ub[i] = cap;
  };
  for (int j = 0; j < m; ++j) {
    bool all_nonneg = true, all_nonpos = true;
    for (int i = 0; i < n; ++i) {
      if (inst.A.at(j, i) > 0) all_nonpos = false;
      if (inst.A.at(j, i) < 0) all_nonneg = false;
    }
    bool row_infeasible = (all_nonneg && inst.b[j] < 0) ||
                          (all_nonpos && inst.b[j] > 0);
    if (row_infeasible) {
      // P is empty; any bound is valid for "all feasible x"
      for (int i = 0; i < n; ++i) tighten(i, BigInt(0));
      continue;
    }
    for (int i = 0; i < n; ++i) {
      const BigInt& a = inst.A.at(j, i);
      if (all_nonneg && a > 0) {
        // sum of nonnegative terms equals b_j, so a x_i <= b_j
        tighten(i, floor_div(inst.b[j], a));
      } else if (all_nonpos && a < 0) {
        tighten(i, floor_div(inst.b[j], a));
      }
    }
  }
  for (const auto& u : ub)
    if (u < 0) return std::nullopt;
  return ub;
}

namespace {

// Interval of achievable sum_{i in [from, n)} A[j][i] * x_i given 0 <= x_i <= ub_i.
struct RowTails {
  // tails[j][from] = [min, max] achievable by variables from..n-1
  std::vector<std::vector<std::pair<BigInt, BigInt>>> tails;

  RowTails(const Instance& inst, const IntVec& ub) {
    int n = inst.n(), m = inst.m();
    tails.assign(m, std::vector<std::pair<BigInt, BigInt>>(n + 1, {0, 0}));
    for (int j = 0; j < m; ++j)
      for (int i = n - 1; i >= 0; --i) {
        const BigInt& a = inst.A.at(j, i);
        BigInt lo = tails[j][i + 1].first, hi = tails[j][i + 1].second;
        if (a > 0)
          hi += a * ub[i];
        else if (a < 0)
          lo += a * ub[i];
        tails[j][i] = {lo, hi};
      }
  }
};

void lattice_dfs(const Instance& inst, const IntVec& ub, const RowTails& tails,
                 int depth, IntVec& partial, IntVec& x,
                 std::vector<IntPoint>& out, long max_points) {
  int n = inst.n(), m = inst.m();
  for (int j = 0; j < m; ++j) {
    BigInt need = inst.b[j] - partial[j];
    if (need < tails.tails[j][depth].first || need > tails.tails[j][depth].second)
      return;
  }
  if (depth == n) {
    out.emplace_back(x);
    if (static_cast<long>(out.size()) > max_points)
      throw BudgetError("enumerate_lattice: point budget exceeded");
    return;
  }
  for (BigInt v = 0; v <= ub[depth]; ++v) {
    x[depth] = v;
    if (v > 0)
      for (int j = 0; j < m; ++j) partial[j] += inst.A.at(j, depth);
    lattice_dfs(inst, ub, tails, depth + 1, partial, x, out, max_points);
  }
  for (int j = 0; j < m; ++j) partial[j] -= inst.A.at(j, depth) * ub[depth];
  x[depth] = 0;
}

}  // namespace

LatticeCloud enumerate_lattice(const Instance& inst, long max_points) {
  auto ub = derive_var_bounds(inst);
  if (!ub)
    throw InfeasibleError(
        "enumerate_lattice: no finite variable bounds derivable; refusing to "
        "truncate");
  LatticeCloud cloud;
  cloud.bounds_used = *ub;
  RowTails tails(inst, *ub);
  IntVec partial(inst.m(), BigInt(0));
  IntVec x(inst.n(), BigInt(0));
  lattice_dfs(inst, *ub, tails, 0, partial, x, cloud.points, max_points);
  std::sort(cloud.points.begin(), cloud.points.end());
  cloud.complete = true;
  return cloud;
}

std::vector<IntPoint> hull_vertices_oracle(const LatticeCloud& cloud,
                                           const Instance& inst,
                                           const OracleOptions& opts) {
  if (!cloud.complete)
    throw Error("hull_vertices_oracle: cloud must be complete");
  // Candidate pool; Lemma 2 makes the kernel certificate a sound pruner
  // (a point with a witness is never a vertex), and the LP result over
  // survivors equals the LP result over the full cloud because the
  // vertices themselves all survive.
  std::vector<const IntPoint*> pool;
  bool prefilter = opts.prefilter_threshold >= 0 &&
                   static_cast<long>(cloud.points.size()) > opts.prefilter_threshold;
  for (const auto& p : cloud.points) {
    if (prefilter) {
      CertifyOptions co;
      if (static_cast<int>(support(p).size()) <= co.max_support &&
          kernel_certificate(inst, p, co))
        continue;
    }
    pool.push_back(&p);
  }
  std::vector<IntPoint> candidates;
  candidates.reserve(pool.size());
  for (auto* p : pool) candidates.push_back(*p);

  std::vector<char> keep(candidates.size(), 0);
  parallel_for(candidates.size(), opts.workers, [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i)
      keep[i] = is_vertex_exact(candidates, candidates[i]) ? 1 : 0;
  });
  std::vector<IntPoint> verts;
  for (size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) verts.push_back(candidates[i]);
  std::sort(verts.begin(), verts.end());
  return verts;
}

std::pair<IntPoint, int> min_support_optimum(const Instance& inst,
                                             const IntVec& c, bool maximize) {
  if (c.size() != static_cast<size_t>(inst.n()))
    throw Error("min_support_optimum: |c| != n");
  LatticeCloud cloud = enumerate_lattice(inst);
  if (cloud.points.empty())
    throw InfeasibleError("min_support_optimum: instance is infeasible");
  const IntPoint* best = nullptr;
  BigInt best_val;
  int best_supp = -1;
  for (const auto& p : cloud.points) {
    BigInt v = dot(c, p.coords);
    if (maximize) v = -v;
    int s = static_cast<int>(support(p).size());
    if (!best || v < best_val || (v == best_val && s < best_supp)) {
      best = &p;
      best_val = v;
      best_supp = s;
    }
  }
  return {*best, best_supp};
}

}  // namespace ihull
