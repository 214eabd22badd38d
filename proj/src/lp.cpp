#include "ihull/lp.hpp"

#include <cassert>

namespace ihull::lp {

namespace {

// Dense tableau over the structural columns plus one artificial per row.
// T is m x (ncols+1); last column is the rhs. basis[i] names the basic
// variable of row i. cost row z (length ncols+1) holds reduced costs and
// -objective in the last slot.
struct Tableau {
  int m = 0;
  int nstruct = 0;
  int ncols = 0;  // nstruct + m artificials
  std::vector<RatVec> T;
  RatVec z;
  std::vector<int> basis;

  bool is_artificial(int j) const { return j >= nstruct; }

  void pivot(int r, int c) {
    BigRat p = T[r][c];
    for (int j = 0; j <= ncols; ++j) T[r][j] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || T[i][c] == 0) continue;
      BigRat f = T[i][c];
      for (int j = 0; j <= ncols; ++j) T[i][j] -= f * T[r][j];
    }
    if (z[c] != 0) {
      BigRat f = z[c];
      for (int j = 0; j <= ncols; ++j) z[j] -= f * T[r][j];
    }
    basis[r] = c;
  }

  // Bland: entering = lowest-index eligible column with negative reduced
  // cost; leaving = min ratio, ties broken by lowest basic variable index.
  // Returns Optimal or Unbounded.
  Status run(bool allow_artificial_entering) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        if (!allow_artificial_entering && is_artificial(j)) continue;
        if (z[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Status::Optimal;
      int leave = -1;
      BigRat best;
      for (int i = 0; i < m; ++i) {
        if (T[i][enter] <= 0) continue;
        BigRat ratio = T[i][ncols] / T[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return Status::Unbounded;
      pivot(leave, enter);
    }
  }

  // Rebuild the cost row for objective vector c (artificials cost 0 unless
  // phase1), pricing out the current basis.
  void set_costs(const RatVec& c, bool phase1) {
    z.assign(ncols + 1, BigRat(0));
    for (int j = 0; j < ncols; ++j) {
      if (j < nstruct)
        z[j] = phase1 ? BigRat(0) : c[j];
      else
        z[j] = phase1 ? BigRat(1) : BigRat(0);
    }
    for (int i = 0; i < m; ++i) {
      int b = basis[i];
      BigRat cb = (b < nstruct) ? (phase1 ? BigRat(0) : c[b])
                                : (phase1 ? BigRat(1) : BigRat(0));
      if (cb == 0) continue;
      for (int j = 0; j <= ncols; ++j) z[j] -= cb * T[i][j];
    }
  }
};

// Phase 1. Returns the tableau at a feasible basis, or nullopt if infeasible.
std::optional<Tableau> phase1(const RatMatrix& E, const RatVec& f) {
  int m = static_cast<int>(E.size());
  if (f.size() != E.size()) throw Error("lp: |f| != row count");
  int n = m ? static_cast<int>(E[0].size()) : 0;

  Tableau t;
  t.m = m;
  t.nstruct = n;
  t.ncols = n + m;
  t.T.assign(m, RatVec(t.ncols + 1, BigRat(0)));
  t.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    if (E[i].size() != static_cast<size_t>(n)) throw Error("lp: ragged matrix");
    bool neg = f[i] < 0;
    for (int j = 0; j < n; ++j) t.T[i][j] = neg ? -E[i][j] : E[i][j];
    t.T[i][n + i] = 1;
    t.T[i][t.ncols] = neg ? -f[i] : f[i];
    t.basis[i] = n + i;
  }
  t.set_costs({}, /*phase1=*/true);
  Status s = t.run(/*allow_artificial_entering=*/true);
  assert(s == Status::Optimal);  // phase-1 objective is bounded below by 0
  (void)s;
  // objective = -z[ncols]
  if (t.z[t.ncols] != 0) return std::nullopt;  // residual infeasibility > 0

  // Drive artificials out of the basis; a row where no structural pivot
  // exists is redundant and gets dropped.
  for (int i = 0; i < t.m;) {
    if (!t.is_artificial(t.basis[i])) {
      ++i;
      continue;
    }
    int c = -1;
    for (int j = 0; j < t.nstruct; ++j)
      if (t.T[i][j] != 0) {
        c = j;
        break;
      }
    if (c >= 0) {
      t.pivot(i, c);
      ++i;
    } else {
      t.T.erase(t.T.begin() + i);
      t.basis.erase(t.basis.begin() + i);
      --t.m;
    }
  }
  return t;
}

}  // namespace

Result solve(const RatMatrix& E, const RatVec& f, const RatVec& c) {
  auto t = phase1(E, f);
  if (!t) return {Status::Infeasible, BigRat(0), {}};
  if (!c.empty() && c.size() != static_cast<size_t>(t->nstruct))
    throw Error("lp: |c| != column count");

  RatVec cost = c.empty() ? RatVec(t->nstruct, BigRat(0)) : c;
  t->set_costs(cost, /*phase1=*/false);
  Status s = t->run(/*allow_artificial_entering=*/false);
  if (s == Status::Unbounded) return {Status::Unbounded, BigRat(0), {}};

  Result r;
  r.status = Status::Optimal;
  r.x.assign(t->nstruct, BigRat(0));
  for (int i = 0; i < t->m; ++i)
    if (t->basis[i] < t->nstruct) r.x[t->basis[i]] = t->T[i][t->ncols];
  r.objective = -t->z[t->ncols];
  return r;
}

bool feasible(const RatMatrix& E, const RatVec& f) {
  return phase1(E, f).has_value();
}

}  // namespace ihull::lp
