#include "ihull/certify.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <unordered_map>

namespace ihull {

namespace {

// Columns of A restricted to the candidate support.
struct SupportCols {
  int m = 0;
  std::vector<IntVec> cols;  // cols[k][j], k over support
};

// DFS over sign patterns in {-1,0,1}^s with per-row capacity pruning:
// a partial image r can still reach zero only if |r_j| does not exceed the
// total remaining column mass of row j.
bool dfs_search(const SupportCols& sc, size_t depth, IntVec& r,
                const std::vector<IntVec>& rest_cap, std::vector<int>& signs,
                bool nonzero_so_far) {
  if (depth == sc.cols.size()) {
    if (!nonzero_so_far) return false;
    for (const auto& v : r)
      if (v != 0) return false;
    return true;
  }
  for (int j = 0; j < sc.m; ++j)
    if (abs(r[j]) > rest_cap[depth][j]) return false;
  for (int s : {0, 1, -1}) {
    if (s != 0)
      for (int j = 0; j < sc.m; ++j) r[j] += s * sc.cols[depth][j];
    signs[depth] = s;
    if (dfs_search(sc, depth + 1, r, rest_cap, signs, nonzero_so_far || s != 0))
      return true;
    if (s != 0)
      for (int j = 0; j < sc.m; ++j) r[j] -= s * sc.cols[depth][j];
  }
  return false;
}

struct KeyHash {
  size_t operator()(const std::vector<int64_t>& k) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int64_t v : k) {
      uint64_t z = static_cast<uint64_t>(v) + h;
      z ^= z >> 30;
      z *= 0xbf58476d1ce4e5b9ULL;
      z ^= z >> 27;
      z *= 0x94d049bb133111ebULL;
      z ^= z >> 31;
      h = z;
    }
    return h;
  }
};

// Decode a base-3 pattern index into signs {0,1,-1}.
void decode_pattern(uint64_t code, size_t count, std::vector<int>& out) {
  static const int kSign[3] = {0, 1, -1};
  for (size_t i = 0; i < count; ++i) {
    out[i] = kSign[code % 3];
    code /= 3;
  }
}

// Meet-in-the-middle. Requires row column-masses to fit in int64 (always
// the case at desk scale); callers fall back to DFS otherwise.
bool mitm_search(const SupportCols& sc, std::vector<int>& signs) {
  size_t s = sc.cols.size();
  size_t h1 = s / 2, h2 = s - h1;
  std::vector<std::vector<int64_t>> c1(h1), c2(h2);
  for (size_t k = 0; k < h1; ++k) {
    c1[k].resize(sc.m);
    for (int j = 0; j < sc.m; ++j) c1[k][j] = static_cast<int64_t>(sc.cols[k][j]);
  }
  for (size_t k = 0; k < h2; ++k) {
    c2[k].resize(sc.m);
    for (int j = 0; j < sc.m; ++j)
      c2[k][j] = static_cast<int64_t>(sc.cols[h1 + k][j]);
  }

  uint64_t n1 = 1;
  for (size_t i = 0; i < h1; ++i) n1 *= 3;
  std::unordered_map<std::vector<int64_t>, uint64_t, KeyHash> stage;
  stage.reserve(n1 * 2);
  std::vector<int> part(std::max(h1, h2));
  std::vector<int64_t> img(sc.m);
  for (uint64_t code = 0; code < n1; ++code) {
    decode_pattern(code, h1, part);
    std::fill(img.begin(), img.end(), 0);
    for (size_t k = 0; k < h1; ++k)
      if (part[k] != 0)
        for (int j = 0; j < sc.m; ++j) img[j] += part[k] * c1[k][j];
    stage.emplace(img, code);  // keep first pattern per image
  }

  uint64_t n2 = 1;
  for (size_t i = 0; i < h2; ++i) n2 *= 3;
  for (uint64_t code = 0; code < n2; ++code) {
    decode_pattern(code, h2, part);
    std::fill(img.begin(), img.end(), 0);
    bool nz2 = false;
    for (size_t k = 0; k < h2; ++k)
      if (part[k] != 0) {
        nz2 = true;
        for (int j = 0; j < sc.m; ++j) img[j] -= part[k] * c2[k][j];
      }
    auto it = stage.find(img);
    if (it == stage.end()) continue;
    if (!nz2 && it->second == 0) {
      // all-zero combination; look for a different first-half pattern with
      // the same (zero) image -- none was stored, so probe nonzero codes.
      bool found = false;
      std::vector<int> alt(h1);
      std::vector<int64_t> probe(sc.m);
      for (uint64_t c = 1; c < n1 && !found; ++c) {
        decode_pattern(c, h1, alt);
        std::fill(probe.begin(), probe.end(), 0);
        for (size_t k = 0; k < h1; ++k)
          if (alt[k] != 0)
            for (int j = 0; j < sc.m; ++j) probe[j] += alt[k] * c1[k][j];
        if (probe == img) {
          for (size_t k = 0; k < h1; ++k) signs[k] = alt[k];
          for (size_t k = 0; k < h2; ++k) signs[h1 + k] = 0;
          found = true;
        }
      }
      if (found) return true;
      continue;
    }
    std::vector<int> first(h1);
    decode_pattern(it->second, h1, first);
    for (size_t k = 0; k < h1; ++k) signs[k] = first[k];
    for (size_t k = 0; k < h2; ++k) signs[h1 + k] = part[k];
    return true;
  }
  return false;
}

}  // namespace

std::optional<KernelWitness> kernel_certificate(const Instance& inst,
                                                const IntPoint& v,
                                                const CertifyOptions& opts) {
  inst.validate();
  if (!v.is_nonnegative()) throw InfeasibleError("kernel_certificate: v < 0");
  IntVec r = residual(inst.A, inst.b, v);
  for (const auto& x : r)
    if (x != 0) throw InfeasibleError("kernel_certificate: A v != b");

  IndexSet S = support(v);
  int s = static_cast<int>(S.size());
  if (s > opts.max_support)
    throw BudgetError("kernel_certificate: support exceeds search budget");
  if (s == 0) return std::nullopt;  // only x = 0 has empty support

  SupportCols sc;
  sc.m = inst.m();
  for (int idx : S) sc.cols.push_back(inst.A.col(idx));

  std::vector<int> signs(s, 0);
  bool found = false;
  bool mitm_ok = s > opts.mitm_threshold;
  if (mitm_ok) {
    // int64 fast path needs every row's total column mass to fit.
    for (int j = 0; j < sc.m && mitm_ok; ++j) {
      BigInt cap = 0;
      for (const auto& col : sc.cols) cap += abs(col[j]);
      if (cap > BigInt(int64_t{1} << 60)) mitm_ok = false;
    }
  }
  if (mitm_ok) {
    found = mitm_search(sc, signs);
  } else {
    // remaining capacity per row from each depth onward
    std::vector<IntVec> rest_cap(s + 1, IntVec(sc.m, BigInt(0)));
    for (int k = s - 1; k >= 0; --k)
      for (int j = 0; j < sc.m; ++j)
        rest_cap[k][j] = rest_cap[k + 1][j] + abs(sc.cols[k][j]);
    rest_cap.pop_back();
    IntVec img(sc.m, BigInt(0));
    found = dfs_search(sc, 0, img, rest_cap, signs, false);
  }
  if (!found) return std::nullopt;

  IntPoint x(IntVec(inst.n(), BigInt(0)));
  for (int k = 0; k < s; ++k) x.coords[S[k]] = signs[k];
  // Soundness: A x = 0 and x != 0 by construction; double-check exactly.
  IntVec zero(inst.m(), BigInt(0));
  for (const auto& c : residual(inst.A, zero, x))
    if (c != 0) throw Error("kernel_certificate: internal witness check failed");
  if (x.is_zero()) throw Error("kernel_certificate: internal zero witness");
  return KernelWitness{std::move(x)};
}

bool is_vertex_exact(const std::vector<IntPoint>& points, const IntPoint& w) {
  std::vector<const IntPoint*> others;
  for (const auto& p : points)
    if (!(p == w)) others.push_back(&p);
  if (others.empty()) return true;

  int n = w.dim();
  int K = static_cast<int>(others.size());
  RatMatrix E(n + 1, RatVec(K, BigRat(0)));
  RatVec f(n + 1);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < K; ++k) E[j][k] = BigRat(others[k]->coords[j]);
    f[j] = BigRat(w.coords[j]);
  }
  for (int k = 0; k < K; ++k) E[n][k] = 1;
  f[n] = 1;
  return !lp::feasible(E, f);
}

}  // namespace ihull
