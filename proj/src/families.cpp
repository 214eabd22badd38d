#include "ihull/families.hpp"

#include <algorithm>

#include "ihull/oracle.hpp"
#include "ihull/rng.hpp"

namespace ihull {

FamilySpec FamilySpec::knapsack_powers(int d) {
  FamilySpec s{Kind::KnapsackPowers};
  s.d = d;
  return s;
}
FamilySpec FamilySpec::block_diagonal(int m, int d) {
  FamilySpec s{Kind::BlockDiagonal};
  s.m = m;
  s.d = d;
  return s;
}
FamilySpec FamilySpec::triangular(int m) {
  FamilySpec s{Kind::Triangular};
  s.m = m;
  return s;
}
FamilySpec FamilySpec::random(int n, int m, long Delta, uint64_t seed) {
  FamilySpec s{Kind::Random};
  s.n = n;
  s.m = m;
  s.Delta = Delta;
  s.seed = seed;
  return s;
}

namespace {

IntVec powers_row(int d) {
  IntVec a(d);
  for (int i = 0; i < d; ++i) a[i] = pow_int(BigInt(2), i);
  return a;
}

}  // namespace

Instance gen(const FamilySpec& spec) {
  Instance inst;
  switch (spec.kind) {
    case FamilySpec::Kind::KnapsackPowers: {
      if (spec.d < 1) throw Error("knapsack-powers: d must be >= 1");
      inst.name = "knapsack-powers-" + std::to_string(spec.d);
      IntVec a = powers_row(spec.d);
      inst.A = IntMatrix::from_rows({a});
      inst.b = {pow_int(BigInt(2), spec.d) - 1};
      inst.c = a;
      break;
    }
    case FamilySpec::Kind::BlockDiagonal: {
      if (spec.d < 1 || spec.m < 1)
        throw Error("block-diagonal: need m, d >= 1");
      inst.name = "block-diagonal-" + std::to_string(spec.m) + "x" +
                  std::to_string(spec.d);
      int n = spec.m * spec.d;
      IntMatrix A(spec.m, n);
      for (int blk = 0; blk < spec.m; ++blk)
        for (int i = 0; i < spec.d; ++i)
          A.at(blk, blk * spec.d + i) = pow_int(BigInt(2), i);
      inst.A = A;
      inst.b.assign(spec.m, pow_int(BigInt(2), spec.d) - 1);
      IntVec c(n);
      for (int blk = 0; blk < spec.m; ++blk)
        for (int i = 0; i < spec.d; ++i) c[blk * spec.d + i] = pow_int(BigInt(2), i);
      inst.c = c;
      break;
    }
    case FamilySpec::Kind::Triangular: {
      if (spec.m < 1) throw Error("triangular: m must be >= 1");
      inst.name = "triangular-" + std::to_string(spec.m);
      IntMatrix A(spec.m, spec.m);
      for (int i = 0; i < spec.m; ++i)
        for (int j = 0; j <= i; ++j) A.at(i, j) = 1;
      inst.A = A;
      // all-ones row sums, so (1,...,1) is feasible
      inst.b.resize(spec.m);
      for (int i = 0; i < spec.m; ++i) inst.b[i] = i + 1;
      break;
    }
    case FamilySpec::Kind::Random: {
      if (spec.n < 1 || spec.m < 1 || spec.Delta < 1)
        throw Error("random: need n, m, Delta >= 1");
      inst.name = "random-n" + std::to_string(spec.n) + "-m" +
                  std::to_string(spec.m) + "-D" + std::to_string(spec.Delta) +
                  "-s" + std::to_string(spec.seed);
      CounterRng rng(spec.seed);
      IntMatrix A(spec.m, spec.n);
      for (int i = 0; i < spec.m; ++i)
        for (int j = 0; j < spec.n; ++j)
          A.at(i, j) = rng.uniform_int(1, spec.Delta, 0,
                                       static_cast<uint64_t>(i) * spec.n + j);
      inst.A = A;
      IntVec x0(spec.n);
      for (int j = 0; j < spec.n; ++j)
        x0[j] = rng.uniform_int(0, 3, 1, static_cast<uint64_t>(j));
      inst.b.resize(spec.m);
      for (int i = 0; i < spec.m; ++i) inst.b[i] = dot(A.row(i), x0);
      break;
    }
  }
  inst.validate();
  return inst;
}

namespace {

// Count the lattice points of {Ax = b, sum x_i = t, x >= 0} up to `cap`,
// remembering the first two found.
long count_with_total(const Instance& inst, const BigInt& t, long cap,
                      std::vector<IntPoint>& found) {
  Instance aug = inst;
  int n = inst.n();
  std::vector<IntVec> rows;
  for (int j = 0; j < inst.m(); ++j) {
    auto r = inst.A.row(j);
    rows.emplace_back(r.begin(), r.end());
  }
  rows.emplace_back(IntVec(n, BigInt(1)));
  aug.A = IntMatrix::from_rows(rows);
  aug.b = inst.b;
  aug.b.push_back(t);
  aug.c.reset();
  aug.var_upper_bounds.reset();
  LatticeCloud cloud = enumerate_lattice(aug, cap);
  for (const auto& p : cloud.points) {
    if (found.size() < 2) found.push_back(p);
  }
  return static_cast<long>(cloud.points.size());
}

}  // namespace

std::pair<IntPoint, int> verify_family_vertex(const FamilySpec& spec,
                                              long oracle_budget) {
  Instance inst = gen(spec);
  int n = inst.n();
  IntPoint ones(IntVec(n, BigInt(1)));
  for (const auto& r : residual(inst.A, inst.b, ones))
    if (r != 0) throw Error("verify_family_vertex: all-ones is not feasible");

  // Full hull oracle when the cloud fits the budget.
  try {
    LatticeCloud cloud = enumerate_lattice(inst, oracle_budget);
    if (static_cast<long>(cloud.points.size()) <= 20000) {
      auto verts = hull_vertices_oracle(cloud, inst);
      if (!std::binary_search(verts.begin(), verts.end(), ones))
        throw Error("verify_family_vertex: all-ones is not a hull vertex");
      return {ones, n};
    }
  } catch (const BudgetError&) {
    // fall through to the uniqueness certificate
  }

  if (spec.kind != FamilySpec::Kind::KnapsackPowers &&
      spec.kind != FamilySpec::Kind::BlockDiagonal)
    throw BudgetError("verify_family_vertex: oracle budget exceeded");

  // Certificate: all-ones uniquely minimizes sum x_i over the lattice, so
  // it is the unique optimum of a linear objective and hence a vertex.
  // The augmented enumerations are tiny because the extra row caps x.
  for (long t = 0; t < n; ++t) {
    std::vector<IntPoint> found;
    if (count_with_total(inst, BigInt(t), oracle_budget, found) != 0)
      throw Error("verify_family_vertex: a sparser representation exists");
  }
  std::vector<IntPoint> found;
  long cnt = count_with_total(inst, BigInt(n), oracle_budget, found);
  if (cnt != 1 || !(found[0] == ones))
    throw Error("verify_family_vertex: all-ones is not the unique minimizer");
  return {ones, n};
}

}  // namespace ihull
