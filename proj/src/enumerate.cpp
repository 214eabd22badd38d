#include "ihull/enumerate.hpp"

#include <algorithm>
#include <set>

#include "ihull/bounds.hpp"
#include "ihull/certify.hpp"
#include "ihull/linalg.hpp"
#include "ihull/oracle.hpp"
#include "ihull/parallel.hpp"

namespace ihull {

std::pair<BigInt, BigInt> BoxDescriptor::coord_range(int i) const {
  if (k[i] == 0) return {L[i], L[i]};
  BigInt lo = L[i] + pow_int(BigInt(2), k[i] - 1);
  BigInt hi = L[i] + pow_int(BigInt(2), k[i]) - 1;
  return {lo, hi};
}

std::vector<RatVec> enumerate_bfs(const Instance& inst) {
  inst.validate();
  int m = inst.m(), n = inst.n();
  if (m > n) throw Error("enumerate_bfs: m > n (reduce rows first)");
  std::vector<RatVec> out;
  std::set<RatVec> seen;

  std::vector<int> B(m);
  for (int i = 0; i < m; ++i) B[i] = i;
  for (;;) {
    RatMatrix M(m, RatVec(m));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) M[r][c] = BigRat(inst.A.at(r, B[c]));
    RatVec rhs(m);
    for (int r = 0; r < m; ++r) rhs[r] = BigRat(inst.b[r]);
    if (auto xb = solve_square(std::move(M), std::move(rhs))) {
      bool nonneg = true;
      for (const auto& v : *xb)
        if (v < 0) {
          nonneg = false;
          break;
        }
      if (nonneg) {
        RatVec full(n, BigRat(0));
        for (int c = 0; c < m; ++c) full[B[c]] = (*xb)[c];
        if (seen.insert(full).second) out.push_back(std::move(full));
      }
    }
    // next m-combination of {0..n-1}
    int i = m - 1;
    while (i >= 0 && B[i] == n - m + i) --i;
    if (i < 0) break;
    ++B[i];
    for (int j = i + 1; j < m; ++j) B[j] = B[j - 1] + 1;
  }
  return out;
}

BigInt proximity_radius(const Instance& inst) {
  BigInt Delta = inst.A.inf_norm();
  if (Delta < 1) throw Error("proximity_radius: Delta must be >= 1");
  int m = inst.m();
  if (m == 1) return 2 * Delta + 1;
  BigInt base = 2 * m * Delta + 1;
  return BigInt(m) * pow_int(base, static_cast<unsigned long>(m));
}

namespace {

struct GridGen {
  const RatVec& y;
  const BigRat R;
  int ell;
  int d;
  IntVec L;
  const std::function<bool(const BoxDescriptor&)>& visit;
  std::vector<int> k;
  bool stopped = false;

  void rec(int i, int used, const BigRat& dist) {
    if (stopped) return;
    if (i == static_cast<int>(y.size())) {
      BoxDescriptor box{k, L, d};
      if (!visit(box)) stopped = true;
      return;
    }
    for (int j = 0; j <= d; ++j) {
      if (j > 0 && used == ell) break;
      // closed-hull l1 contribution of coordinate i for dyadic index j
      BigRat lo(L[i] + (j == 0 ? BigInt(0) : pow_int(BigInt(2), j - 1)));
      BigRat hi(L[i] + (j == 0 ? BigInt(1) : pow_int(BigInt(2), j)));
      BigRat contrib(0);
      if (y[i] < lo)
        contrib = lo - y[i];
      else if (y[i] > hi)
        contrib = y[i] - hi;
      BigRat nd = dist + contrib;
      if (nd > R) {
        // once the cell's lower edge is past the ball it stays past it;
        // cells below y only get closer as j grows, so keep scanning
        if (y[i] < lo) break;
        continue;
      }
      k[i] = j;
      rec(i + 1, used + (j > 0 ? 1 : 0), nd);
      if (stopped) return;
    }
    k[i] = 0;
  }
};

}  // namespace

void box_grid(const RatVec& y, const BigInt& R, int ell,
              const std::function<bool(const BoxDescriptor&)>& visit) {
  if (R < 1) throw Error("box_grid: R must be >= 1");
  int n = static_cast<int>(y.size());
  int d = static_cast<int>(ceil_log2(BigInt(8 * R)));
  IntVec L(n);
  for (int i = 0; i < n; ++i) {
    BigInt c = ceil_rat(y[i] - BigRat(R));
    L[i] = c > 0 ? c : BigInt(0);
  }
  GridGen gen{y, BigRat(R), ell, d, std::move(L), visit,
              std::vector<int>(n, 0)};
  gen.rec(0, 0, BigRat(0));
}

namespace {

struct SearchVar {
  BigInt lo, hi;
  bool fixed() const { return lo == hi; }
};

// one propagation sweep; returns false when a range empties
bool propagate(const Instance& inst, std::vector<SearchVar>& v) {
  int m = inst.m(), n = inst.n();
  bool changed = true;
  int guard = 0;
  while (changed) {
    changed = false;
    if (++guard > 4 * n * m + 16) break;  // ranges shrink monotonically
    for (int j = 0; j < m; ++j) {
      BigInt smin = 0, smax = 0;
      for (int i = 0; i < n; ++i) {
        const BigInt& a = inst.A.at(j, i);
        if (a > 0) {
          smin += a * v[i].lo;
          smax += a * v[i].hi;
        } else if (a < 0) {
          smin += a * v[i].hi;
          smax += a * v[i].lo;
        }
      }
      if (inst.b[j] < smin || inst.b[j] > smax) return false;
      for (int i = 0; i < n; ++i) {
        const BigInt& a = inst.A.at(j, i);
        if (a == 0) continue;
        BigInt own_min = a > 0 ? a * v[i].lo : a * v[i].hi;
        BigInt own_max = a > 0 ? a * v[i].hi : a * v[i].lo;
        BigInt omin = smin - own_min, omax = smax - own_max;
        // a x_i in [b - omax, b - omin]
        BigInt tlo = inst.b[j] - omax, thi = inst.b[j] - omin;
        BigInt nlo, nhi;
        if (a > 0) {
          nlo = ceil_div(tlo, a);
          nhi = floor_div(thi, a);
        } else {
          nlo = ceil_div(thi, a);
          nhi = floor_div(tlo, a);
        }
        if (nlo > v[i].lo) {
          v[i].lo = nlo;
          changed = true;
        }
        if (nhi < v[i].hi) {
          v[i].hi = nhi;
          changed = true;
        }
        if (v[i].lo > v[i].hi) return false;
      }
    }
  }
  return true;
}

std::optional<IntPoint> search_rec(const Instance& inst,
                                   std::vector<SearchVar> v) {
  if (!propagate(inst, v)) return std::nullopt;
  int branch = -1;
  BigInt width = -1;
  for (int i = 0; i < inst.n(); ++i) {
    if (v[i].fixed()) continue;
    BigInt w = v[i].hi - v[i].lo;
    if (branch < 0 || w < width) {
      branch = i;
      width = w;
    }
  }
  if (branch < 0) {
    IntVec x(inst.n());
    for (int i = 0; i < inst.n(); ++i) x[i] = v[i].lo;
    IntPoint p(std::move(x));
    for (const auto& r : residual(inst.A, inst.b, p))
      if (r != 0) return std::nullopt;
    return p;
  }
  BigInt lo = v[branch].lo, hi = v[branch].hi;
  for (BigInt val = lo; val <= hi; ++val) {
    auto child = v;
    child[branch].lo = val;
    child[branch].hi = val;
    if (auto found = search_rec(inst, std::move(child))) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<IntPoint> box_integer_search(const Instance& inst,
                                           const BoxDescriptor& box,
                                           const SecondProbe* probe) {
  int n = inst.n();
  if (static_cast<int>(box.k.size()) != n || static_cast<int>(box.L.size()) != n)
    throw Error("box_integer_search: descriptor size mismatch");
  std::vector<SearchVar> v(n);
  for (int i = 0; i < n; ++i) {
    auto [lo, hi] = box.coord_range(i);
    v[i] = {lo, hi};
  }
  if (probe) {
    const BigInt& base = probe->base->coords[probe->coord];
    if (probe->direction < 0) {
      BigInt cap = base - 1;
      if (cap < v[probe->coord].hi) v[probe->coord].hi = cap;
    } else {
      BigInt cap = base + 1;
      if (cap > v[probe->coord].lo) v[probe->coord].lo = cap;
    }
    if (v[probe->coord].lo > v[probe->coord].hi) return std::nullopt;
  }
  return search_rec(inst, std::move(v));
}

namespace {

// Drop dependent rows; returns false when the dependencies are inconsistent
// (infeasible system).
bool reduce_rows(const Instance& inst, Instance& out) {
  std::vector<int> keep = independent_rows(inst.A);
  if (static_cast<int>(keep.size()) == inst.m()) {
    out = inst;
    return true;
  }
  RatMatrix Ab;
  for (int i = 0; i < inst.m(); ++i) {
    RatVec row(inst.n() + 1);
    for (int j = 0; j < inst.n(); ++j) row[j] = BigRat(inst.A.at(i, j));
    row[inst.n()] = BigRat(inst.b[i]);
    Ab.push_back(std::move(row));
  }
  RatMatrix Aonly;
  for (auto& r : Ab) Aonly.push_back(RatVec(r.begin(), r.end() - 1));
  if (rat_rank(Ab) != rat_rank(Aonly)) return false;  // b outside row space

  out = inst;
  if (keep.empty()) return true;  // A = 0 with b = 0; caller handles

  std::vector<IntVec> rows;
  IntVec b;
  for (int i : keep) {
    auto r = inst.A.row(i);
    rows.emplace_back(r.begin(), r.end());
    b.push_back(inst.b[i]);
  }
  out.A = IntMatrix::from_rows(rows);
  out.b = std::move(b);
  return true;
}

}  // namespace

HullResult enumerate_vertices(const Instance& inst, const EnumerateOptions& opts) {
  inst.validate();
  HullResult res;
  if (inst.n() > opts.max_n)
    throw BudgetError("enumerate_vertices: n exceeds the configured budget");

  Instance red;
  if (!reduce_rows(inst, red)) {
    res.infeasible = true;
    return res;
  }
  BigInt Delta = red.A.inf_norm();
  if (Delta == 0) {
    // A = 0: P is {0} or the whole orthant
    bool bzero = true;
    for (const auto& x : red.b)
      if (x != 0) bzero = false;
    if (!bzero) {
      res.infeasible = true;
    } else {
      res.unbounded_warning = true;
    }
    return res;
  }
  if (!derive_var_bounds(red)) res.unbounded_warning = true;

  int m = red.m();
  long ell;
  if (m == 1) {
    Rounder dn = round_down();
    HPReal lo = dn.mul(dn.rat(3, 2), dn.log2(dn.mul(dn.rat(12, 5), dn.from(Delta))));
    ell = ceil_to_long(lo, knapsack_delta_bound(Delta));
  } else {
    Rounder up = round_up(), dn = round_down();
    auto cor12 = [&](const Rounder& r) {
      return r.mul(r.from(2 * m),
                   r.log2(r.mul(r.mul(r.from(24), r.sqrt(r.from(m))), r.from(Delta))));
    };
    ell = ceil_to_long(cor12(dn), cor12(up));
  }
  BigInt R = proximity_radius(red);

  std::vector<RatVec> bfs = enumerate_bfs(red);
  if (bfs.empty()) {
    res.infeasible = true;
    return res;
  }
  res.bfs_used = static_cast<long>(bfs.size());

  std::set<IntPoint> pool;
  long boxes = 0;

  // Probe one cell: keep its point only when it is the cell's unique one.
  auto probe_box = [&](const BoxDescriptor& box) -> std::optional<IntPoint> {
    auto first = box_integer_search(red, box);
    if (!first) return std::nullopt;
    for (int c = 0; c < red.n(); ++c) {
      if (box.k[c] == 0) continue;
      for (int dir : {-1, +1}) {
        SecondProbe p{&*first, c, dir};
        if (box_integer_search(red, box, &p)) return std::nullopt;
      }
    }
    return first;
  };

  // Boxes are independent; probe them in parallel batches and merge the
  // singleton pool under the single generator thread.
  const size_t kBatch = 2048;
  std::vector<BoxDescriptor> batch;
  auto flush = [&] {
    std::vector<std::optional<IntPoint>> found(batch.size());
    parallel_for(batch.size(), opts.workers, [&](size_t b, size_t e) {
      for (size_t i = b; i < e; ++i) found[i] = probe_box(batch[i]);
    });
    for (auto& f : found)
      if (f) pool.insert(std::move(*f));
    batch.clear();
  };

  for (const auto& y : bfs) {
    box_grid(y, R, static_cast<int>(ell), [&](const BoxDescriptor& box) {
      ++boxes;
      if (opts.max_boxes >= 0 && boxes > opts.max_boxes)
        throw BudgetError("enumerate_vertices: box budget exceeded");
      batch.push_back(box);
      if (batch.size() >= kBatch) flush();
      return true;
    });
    flush();
  }
  res.boxes_probed = boxes;

  std::vector<IntPoint> W(pool.begin(), pool.end());
  res.candidates_considered = static_cast<long>(W.size());
  std::vector<char> keep(W.size(), 0);
  parallel_for(W.size(), opts.workers, [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) keep[i] = is_vertex_exact(W, W[i]) ? 1 : 0;
  });
  for (size_t i = 0; i < W.size(); ++i)
    if (keep[i]) res.vertices.push_back(W[i]);
  std::sort(res.vertices.begin(), res.vertices.end());
  return res;
}

}  // namespace ihull
