#include "ihull/bounds.hpp"

#include <algorithm>
#include <cassert>

#include "ihull/lp.hpp"

namespace ihull {

namespace {

// root brackets narrower than 2^-70 leave |g| < 2^-64 at the returned end
const long kBracketBits = -70;

bool is_zero_vec(std::span<const BigInt> a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

IntVec restrict_vec(const IntVec& a, const IndexSet& S) {
  IntVec r;
  r.reserve(S.size());
  for (int i : S) {
    if (i < 0 || i >= static_cast<int>(a.size()))
      throw Error("support index out of range");
    r.push_back(a[i]);
  }
  return r;
}

}  // namespace

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Exact:
      return "exact";
    case Provenance::RoundedUp:
      return "rounded-up";
    case Provenance::RoundedDown:
      return "rounded-down";
    case Provenance::MonteCarlo:
      return "monte-carlo";
  }
  return "?";
}

const BoundEntry* BoundReport::find(const std::string& tag) const {
  for (const auto& e : entries)
    if (e.tag == tag) return &e;
  return nullptr;
}

Bracket bisect_increasing(const std::function<HPReal(const HPReal&)>& g,
                          HPReal lo, HPReal hi) {
  HPReal glo = g(lo);
  if (glo.sign() > 0) throw Error("bisect: g(lo) > 0");
  HPReal ghi = g(hi);
  int doublings = 0;
  while (ghi.sign() < 0) {
    if (++doublings > 80) throw Error("bisect: no sign change found");
    hi = hp_mul(hi, HPReal::of(2), Round::Nearest);
    ghi = g(hi);
  }
  HPReal width_limit = HPReal::pow2(kBracketBits);
  while (hp_sub(hi, lo, Round::Up) > width_limit) {
    HPReal mid = hp_mul(hp_add(lo, hi, Round::Nearest), HPReal::ratio(1, 2, Round::Nearest),
                        Round::Nearest);
    if (!(lo < mid && mid < hi)) break;  // bracket at precision floor
    if (g(mid).sign() <= 0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

long ceil_to_long(const HPReal& lo, const HPReal& hi) {
  BigInt a = hp_ceil(lo), b = hp_ceil(hi);
  BigInt c = a > b ? a : b;
  return static_cast<long>(c);
}

HPReal knapsack_pigeonhole(const IntVec& a) {
  if (is_zero_vec(a)) throw Error("knapsack_pigeonhole: zero vector");
  Rounder r = round_up();
  return r.add(r.log2(r.from(l1_norm(a))), r.from(1));
}

HPReal knapsack_l2_bound(const IntVec& a, const IndexSet& S) {
  if (S.empty()) throw Error("knapsack_l2_bound: empty support set");
  IntVec as = restrict_vec(a, S);
  BigInt sq = l2_norm_sq(as);
  if (sq == 0) throw Error("knapsack_l2_bound: zero restriction");
  Rounder r = round_up();
  return r.log2(r.mul(r.rat(351, 100), r.sqrt(r.from(sq))));
}

HPReal knapsack_delta_bound(const BigInt& Delta) {
  if (Delta < 1) throw Error("knapsack_delta_bound: Delta must be >= 1");
  Rounder r = round_up();
  return r.mul(r.rat(3, 2), r.log2(r.mul(r.rat(12, 5), r.from(Delta))));
}

KnapsackImplicit knapsack_implicit_bound(const BigInt& Delta) {
  if (Delta < 1) throw Error("knapsack_implicit_bound: Delta must be >= 1");
  Rounder n = round_near();
  HPReal cD = n.mul(n.rat(351, 100), n.from(Delta));
  // g(s) = s - log2(3.51 sqrt(s) Delta); g' = 1 - 1/(2 s ln 2) > 0 for s >= 1
  auto g = [&](const HPReal& s) {
    return hp_sub(s, n.log2(n.mul(cD, n.sqrt(s))), Round::Nearest);
  };
  // g(1) = 1 - log2(3.51 Delta) < 0 since log2(3.51) > 1.8
  Bracket br = bisect_increasing(g, HPReal::of(1), HPReal::of(8));

  Rounder u = round_up();
  HPReal twoD = u.mul(u.from(2), u.from(Delta));
  HPReal closed =
      u.log2(u.mul(twoD, u.sqrt(u.mul(u.rat(3, 2), u.log2(twoD)))));
  return {br.hi, br.lo, closed};
}

HPReal general_gamma(const IntMatrix& A, const IndexSet& S) {
  if (S.empty()) throw Error("general_gamma: empty support set");
  IntMatrix B = A.select_cols(S);
  Rounder r = round_up();
  HPReal row_sum = HPReal::of(0);
  for (int j = 0; j < B.rows(); ++j)
    row_sum = r.add(row_sum, r.sqrt(r.from(B.row_l2_sq(j))));
  BigInt col_sq = 0;
  for (int i = 0; i < B.cols(); ++i) {
    BigInt l1 = B.col_l1(i);
    col_sq += l1 * l1;
  }
  return r.add(r.mul(r.rat(28, 25), row_sum), r.sqrt(r.from(col_sq)));
}

HPReal general_supp_bound(const IntMatrix& A, const IndexSet& S) {
  HPReal gamma = general_gamma(A, S);
  Rounder r = round_up();
  HPReal two_e = r.mul(r.from(2), r.e());
  int m = A.rows();
  HPReal inner = r.add(r.div(r.mul(two_e, gamma), r.from(m)), two_e);
  return r.mul(r.from(m), r.log2(inner));
}

HPReal general_delta_bound(int m, const BigInt& Delta, GeneralDeltaVariant v,
                           const BigRat& eps) {
  if (m < 1 || Delta < 1) throw Error("general_delta_bound: need m, Delta >= 1");
  Rounder u = round_up();
  switch (v) {
    case GeneralDeltaVariant::Corollary24: {
      HPReal inner = u.mul(u.mul(u.from(24), u.sqrt(u.from(m))), u.from(Delta));
      return u.mul(u.from(2 * m), u.log2(inner));
    }
    case GeneralDeltaVariant::Warmup: {
      if (eps <= 0) throw Error("general_delta_bound: epsilon must be > 0");
      BigRat one_plus = eps + 1;
      HPReal factor = u.sqrt(u.from(BigRat(one_plus / (2 * eps))));
      HPReal inner = u.mul(u.rat(106, 25), u.e());
      inner = u.mul(inner, u.from(BigRat(BigRat(Delta + 1), BigRat(Delta))));
      inner = u.mul(inner, factor);
      inner = u.mul(inner, u.sqrt(u.from(m)));
      inner = u.mul(inner, u.from(Delta));
      return u.mul(u.mul(u.from(BigRat(one_plus)), u.from(m)), u.log2(inner));
    }
    case GeneralDeltaVariant::ImplicitRoot: {
      Rounder n = round_near();
      HPReal coef = n.mul(n.mul(n.rat(106, 25), n.e()), n.from(Delta));
      HPReal two_e = n.mul(n.from(2), n.e());
      // g(s) = s - m log2(4.24 e sqrt(s) Delta + 2e); increasing for s >= m
      auto g = [&](const HPReal& s) {
        return hp_sub(s, n.mul(n.from(m), n.log2(n.add(n.mul(coef, n.sqrt(s)), two_e))),
                      Round::Nearest);
      };
      Bracket br = bisect_increasing(g, HPReal::of(m), HPReal::of(8 * m));
      return br.hi;
    }
  }
  throw Error("general_delta_bound: unknown variant");
}

HPReal pigeonhole_general(int m, const BigInt& s, const BigInt& Delta) {
  Rounder r = round_up();
  return r.mul(r.from(m), r.log2(r.from(BigInt(s * Delta + 1))));
}

HPReal simple_related(const IntMatrix& A, const IndexSet& S) {
  if (S.empty()) throw Error("simple_related: empty support set");
  IntMatrix B = A.select_cols(S);
  Rounder r = round_up();
  HPReal sum = HPReal::of(0);
  for (int j = 0; j < B.rows(); ++j)
    sum = r.add(sum, r.log2(r.from(BigInt(B.row_l1(j) + 1))));
  return sum;
}

BigRat structure_distance(const IntVec& a_k, const std::vector<IntVec>& basis) {
  for (const auto& v : basis)
    if (v.size() != a_k.size()) throw Error("structure_distance: length mismatch");
  size_t n = a_k.size();
  size_t k = basis.size();
  if (k == 0) {
    BigInt v = l1_norm(a_k);
    return BigRat(v);
  }
  // variables: lambda+ (k), lambda- (k), e+ (n), e- (n)
  // rows: sum_i (l+_i - l-_i) basis_i[j] + e+_j - e-_j = a_k[j]
  size_t cols = 2 * k + 2 * n;
  RatMatrix E(n, RatVec(cols, BigRat(0)));
  RatVec f(n);
  RatVec c(cols, BigRat(0));
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < k; ++i) {
      E[j][i] = BigRat(basis[i][j]);
      E[j][k + i] = -BigRat(basis[i][j]);
    }
    E[j][2 * k + j] = 1;
    E[j][2 * k + n + j] = -1;
    f[j] = BigRat(a_k[j]);
  }
  for (size_t j = 0; j < 2 * n; ++j) c[2 * k + j] = 1;
  auto res = lp::solve(E, f, c);
  if (res.status != lp::Status::Optimal)
    throw Error("structure_distance: deviation LP did not solve");
  return res.objective;
}

StructureBound structure_bound(const IntMatrix& A, int max_m) {
  int m = A.rows();
  if (m > max_m)
    throw BudgetError("structure_bound: too many rows for exhaustive row orders");
  std::vector<IntVec> rows(m);
  for (int i = 0; i < m; ++i) {
    auto r = A.row(i);
    rows[i] = IntVec(r.begin(), r.end());
  }
  // d(j | T) depends only on the set T, so memoize per (subset, next row)
  // and take the min product over orders by subset DP.
  int full = (1 << m) - 1;
  std::vector<BigInt> best(1 << m);
  std::vector<int> pick(1 << m, -1);
  best[0] = 1;
  for (int mask = 1; mask <= full; ++mask) {
    BigInt b = -1;
    for (int j = 0; j < m; ++j) {
      if (!(mask & (1 << j))) continue;
      int rest = mask & ~(1 << j);
      std::vector<IntVec> base;
      for (int i = 0; i < m; ++i)
        if (rest & (1 << i)) base.push_back(rows[i]);
      BigInt d = ceil_rat(structure_distance(rows[j], base));
      BigInt cand = best[rest] * (d + 1);
      if (b < 0 || cand < b) {
        b = cand;
        pick[mask] = j;
      }
    }
    best[mask] = b;
  }
  StructureBound out;
  out.product = best[full];
  out.log_bound = hp_log2(HPReal::of(out.product, Round::Up), Round::Up);
  for (int mask = full; mask; mask &= ~(1 << pick[mask]))
    out.order.push_back(pick[mask]);
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

HPReal minkowski_bound(const IntMatrix& A) {
  int m = A.rows();
  BigInt det = bareiss_det(gram(A));
  if (det <= 0) throw Error("minkowski_bound: A is row-rank deficient");
  Rounder r = round_up();
  HPReal v = r.add(HPReal::of(m), r.mul(r.from(m), r.log2(r.from(m))));
  return r.add(v, r.mul(r.rat(1, 2), r.log2(r.from(det))));
}

VertexCountBounds vertex_count_bounds(int n, int m, const BigInt& Delta) {
  if (n < 1 || m < 1 || Delta < 1)
    throw Error("vertex_count_bounds: need n, m, Delta >= 1");
  VertexCountBounds out;
  {
    HPReal up = knapsack_delta_bound(Delta);
    Rounder d = round_down();
    HPReal down =
        d.mul(d.rat(3, 2), d.log2(d.mul(d.rat(12, 5), d.from(Delta))));
    out.ell = ceil_to_long(down, up);
    out.d = ceil_log2(BigInt(8 * (2 * Delta + 1)));
    out.knapsack_count =
        BigInt(out.ell) *
        pow_int(BigInt(n) * out.d, static_cast<unsigned long>(out.ell + 1));
  }
  {
    Rounder r = round_up();
    HPReal L = r.mul(r.from(2 * m),
                     r.log2(r.mul(r.mul(r.from(24), r.sqrt(r.from(m))), r.from(Delta))));
    out.general_ell = L;
    // n^m * L * n^L * (m log2(m (2 m Delta + 1)))^L, in log2 space
    BigInt inner_int = BigInt(m) * (2 * m * Delta + 1);
    HPReal inner = r.mul(r.from(m), r.log2(r.from(inner_int)));
    HPReal log_count = r.mul(r.from(m), r.log2(r.from(n)));
    log_count = r.add(log_count, r.log2(L));
    log_count = r.add(log_count, r.mul(L, r.log2(r.from(n))));
    log_count = r.add(log_count, r.mul(L, r.log2(inner)));
    out.general_count = r.exp2(log_count);
  }
  return out;
}

namespace {

// exact comparison of log2(a) against a rational t = p/q: a^q vs 2^p
int log2_cmp_exact(const BigRat& a, const BigRat& t) {
  if (a <= 0) throw Error("log2_cmp: nonpositive argument");
  BigInt p = numerator(t), q = denominator(t);
  BigInt na = numerator(a), da = denominator(a);
  unsigned long qe = static_cast<unsigned long>(q);
  BigInt lhs_num = pow_int(na, qe);
  BigInt lhs_den = pow_int(da, qe);
  BigInt lhs, rhs;
  if (p >= 0) {
    lhs = lhs_num;
    rhs = pow_int(BigInt(2), static_cast<unsigned long>(p)) * lhs_den;
  } else {
    lhs = lhs_num * pow_int(BigInt(2), static_cast<unsigned long>(-p));
    rhs = lhs_den;
  }
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

// sqrt of a rational, when rational (both parts perfect squares)
std::optional<BigRat> exact_sqrt(const BigRat& a) {
  BigInt n = numerator(a), d = denominator(a);
  if (n < 0) return std::nullopt;
  BigInt rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return BigRat(rn, rd);
}

// Thm 20 case table, conditions in order, ties toward the later case.
int ineq_case_of(int m, const BigRat& cd) {
  Rounder up = round_up(), dn = round_down();
  // case 1: m < (2/3) cd / log2(cd), i.e. log2(cd) < 2 cd / (3 m)
  {
    HPReal lhs_hi = up.log2(up.from(cd));
    HPReal lhs_lo = dn.log2(dn.from(cd));
    BigRat t = BigRat(2) * cd / (3 * m);
    HPReal rhs_lo = dn.from(t), rhs_hi = up.from(t);
    if (lhs_hi < rhs_lo) return 1;
    if (lhs_lo < rhs_hi) {
      // enclosures overlap: decide exactly
      if (log2_cmp_exact(cd, t) < 0) return 1;
    }
  }
  // case 2: log2(cd) < sqrt(cd)
  {
    HPReal l_hi = up.log2(up.from(cd));
    HPReal l_lo = dn.log2(dn.from(cd));
    HPReal s_hi = up.sqrt(up.from(cd));
    HPReal s_lo = dn.sqrt(dn.from(cd));
    if (l_hi < s_lo) return 2;
    if (l_lo < s_hi) {
      // ambiguous at 128 bits: exact only when sqrt(cd) is rational
      if (auto s = exact_sqrt(cd)) {
        if (log2_cmp_exact(cd, *s) < 0) return 2;
      }
      // otherwise resolve toward the later case
    }
  }
  // case 3: sqrt(cd) >= 3m/2  <=>  4 cd >= 9 m^2
  if (4 * cd >= BigRat(9) * m * m) return 3;
  return 4;
}

}  // namespace

MinimalY minimal_Y(int m, const BigRat& cd) {
  if (m < 1) throw Error("minimal_Y: m must be >= 1");
  if (cd < 2) throw Error("minimal_Y: cDelta must be >= 2");
  Rounder n = round_near();
  HPReal target = n.mul(n.from(m), n.log2(n.from(cd)));
  // g(Y) = Y - (m/2) log2(Y) - m log2(cd); g' = 1 - m/(2 Y ln 2) > 0 for Y >= m
  auto g = [&](const HPReal& Y) {
    return hp_sub(hp_sub(Y, n.mul(n.rat(m, 2), n.log2(Y)), Round::Nearest),
                  target, Round::Nearest);
  };
  HPReal lo = target;  // g(lo) = -(m/2) log2(lo) <= 0 since lo >= 1
  HPReal hi = n.add(n.add(target, n.mul(target, n.log2(n.from(cd)))), n.from(m));
  Bracket br = bisect_increasing(g, lo, hi);

  MinimalY out;
  out.root = br.hi;
  out.root_lo = br.lo;
  // smallest integer Y with Y - (m/2) log2(Y) > m log2(cd), i.e.
  // 2^(2Y) q^(2m) > Y^m p^(2m), exact
  BigInt p = numerator(cd), q = denominator(cd);
  BigInt p2m = pow_int(p, 2ul * m), q2m = pow_int(q, 2ul * m);
  for (BigInt Y = 1;; ++Y) {
    BigInt lhs = pow_int(BigInt(2), static_cast<unsigned long>(2 * Y)) * q2m;
    BigInt rhs = pow_int(Y, static_cast<unsigned long>(m)) * p2m;
    if (lhs > rhs) {
      out.integer_min = Y;
      break;
    }
    if (Y > 100000) throw Error("minimal_Y: integer scan runaway");
  }
  return out;
}

IneqCase ineq_table_bound(int m, const BigRat& cd) {
  if (m < 1) throw Error("ineq_table_bound: m must be >= 1");
  if (cd < 2) throw Error("ineq_table_bound: cDelta must be >= 2");
  Rounder r = round_up();
  HPReal hcd = r.from(cd);
  int c = ineq_case_of(m, cd);
  HPReal inner;
  switch (c) {
    case 1:  // m log2(cd sqrt((3m/2) log2(cd)))
      inner = r.mul(r.rat(3 * m, 2), r.log2(hcd));
      break;
    case 2:  // m log2(cd sqrt(3m log2(3m/sqrt(2)))); 3m/sqrt(2) = (3m/2) sqrt(2)
      inner = r.mul(r.from(3 * m),
                    r.log2(r.mul(r.rat(3 * m, 2), r.sqrt(r.from(2)))));
      break;
    case 3:  // m log2(cd sqrt((3m/2) log2(3m log2(cd))))
      inner = r.mul(r.rat(3 * m, 2),
                    r.log2(r.mul(r.from(3 * m), r.log2(hcd))));
      break;
    default:  // m log2(cd sqrt(3m log2(3m)))
      inner = r.mul(r.from(3 * m), r.log2(r.from(3 * m)));
      break;
  }
  IneqCase out;
  out.case_id = c;
  out.m = m;
  out.cDelta = hcd;
  out.bound = r.mul(r.from(m), r.log2(r.mul(hcd, r.sqrt(inner))));
  return out;
}

IneqCase ineq_table_bound(int m, const BigRat& c, const BigInt& Delta) {
  return ineq_table_bound(m, BigRat(c * Delta));
}

HPReal ineq_uniform_bound(int m, const BigRat& cd) {
  if (m < 1) throw Error("ineq_uniform_bound: m must be >= 1");
  if (cd < 2) throw Error("ineq_uniform_bound: cDelta must be >= 2");
  Rounder r = round_up();
  HPReal inner = r.mul(r.mul(r.rat(23514, 10000), r.from(cd)), r.sqrt(r.from(m)));
  return r.mul(r.mul(r.rat(3, 2), r.from(m)), r.log2(inner));
}

HPReal ineq_uniform_bound(int m, const BigRat& c, const BigInt& Delta) {
  return ineq_uniform_bound(m, BigRat(c * Delta));
}

int sqrt_log_crossover(const HPReal& x) {
  if (x.sign() <= 0) throw Error("sqrt_log_crossover: x must be > 0");
  HPReal s_lo = hp_sqrt(x, Round::Down), s_hi = hp_sqrt(x, Round::Up);
  HPReal l_lo = hp_log2(x, Round::Down), l_hi = hp_log2(x, Round::Up);
  if (s_hi < l_lo) return -1;
  if (s_lo > l_hi) return 1;
  return 0;
}

BoundReport evaluate_all_bounds(const Instance& inst, const IndexSet& S,
                                const BigRat& eps) {
  if (S.empty()) throw Error("evaluate_all_bounds: empty support set");
  BoundReport rep;
  const IntMatrix& A = inst.A;
  int m = inst.m();
  BigInt Delta = A.inf_norm();
  BigInt s = static_cast<long>(S.size());

  auto add = [&](std::string tag, HPReal v,
                 Provenance p = Provenance::RoundedUp, std::string exact = "") {
    rep.entries.push_back({std::move(tag), std::move(v), true, "", p, std::move(exact)});
  };
  auto skip = [&](std::string tag, std::string why) {
    rep.entries.push_back(
        {std::move(tag), HPReal(), false, std::move(why), Provenance::RoundedUp, ""});
  };

  if (m == 1) {
    auto row = A.row(0);
    IntVec a(row.begin(), row.end());
    add("Pigeonhole", knapsack_pigeonhole(a));
    add("Thm4", knapsack_l2_bound(a, S));
    add("Cor6", knapsack_delta_bound(Delta));
    auto impl = knapsack_implicit_bound(Delta);
    add("Lem5.root", impl.root);
    add("Lem5.closed", impl.closed_form);
  } else {
    skip("Pigeonhole", "knapsack-only (m > 1)");
    skip("Thm4", "knapsack-only (m > 1)");
    skip("Cor6", "knapsack-only (m > 1)");
    skip("Lem5.root", "knapsack-only (m > 1)");
    skip("Lem5.closed", "knapsack-only (m > 1)");
  }

  add("Thm9.Gamma", general_gamma(A, S));
  add("Thm9", general_supp_bound(A, S));
  add("Lem11.root",
      general_delta_bound(m, Delta, GeneralDeltaVariant::ImplicitRoot));
  add("Cor12", general_delta_bound(m, Delta, GeneralDeltaVariant::Corollary24));
  add("Lem15", general_delta_bound(m, Delta, GeneralDeltaVariant::Warmup, eps));
  add("PigeonholeGeneral", pigeonhole_general(m, s, Delta));
  add("SimpleRelated", simple_related(A, S));

  if (m <= 9) {
    auto sb = structure_bound(A);
    add("Lem18", sb.log_bound, Provenance::RoundedUp, sb.product.str());
  } else {
    skip("Lem18", "m > 9: row-order search too large");
  }
  try {
    add("Lem19", minkowski_bound(A));
  } catch (const Error& e) {
    skip("Lem19", e.what());
  }

  auto counts = vertex_count_bounds(inst.n(), m, Delta);
  if (m == 1) {
    add("Count.knapsack", HPReal::of(counts.knapsack_count, Round::Up),
        Provenance::Exact, counts.knapsack_count.str());
  } else {
    skip("Count.knapsack", "knapsack-only (m > 1)");
  }
  add("Count.general", counts.general_count);
  return rep;
}

}  // namespace ihull
