#include "ihull/concentration.hpp"

#include <cmath>

#include "ihull/parallel.hpp"
#include "ihull/rng.hpp"

namespace ihull {

BoundedVectorFamily BoundedVectorFamily::from_matrix_columns(const IntMatrix& A) {
  BoundedVectorFamily fam;
  fam.n = A.cols();
  fam.m = A.rows();
  fam.lower.assign(fam.n, RatVec(fam.m));
  fam.upper.assign(fam.n, RatVec(fam.m));
  for (int i = 0; i < fam.n; ++i)
    for (int j = 0; j < fam.m; ++j) {
      BigRat half(abs(A.at(j, i)), BigInt(2));
      fam.lower[i][j] = -half;
      fam.upper[i][j] = half;
    }
  return fam;
}

BoundedVectorFamily BoundedVectorFamily::symmetric(int n, int m,
                                                   const BigRat& half) {
  BoundedVectorFamily fam;
  fam.n = n;
  fam.m = m;
  fam.lower.assign(n, RatVec(m, -half));
  fam.upper.assign(n, RatVec(m, half));
  return fam;
}

void BoundedVectorFamily::validate() const {
  if (n < 1 || m < 1) throw Error("family: n, m must be >= 1");
  if (lower.size() != static_cast<size_t>(n) ||
      upper.size() != static_cast<size_t>(n))
    throw Error("family: box count != n");
  for (int i = 0; i < n; ++i) {
    if (lower[i].size() != static_cast<size_t>(m) ||
        upper[i].size() != static_cast<size_t>(m))
      throw Error("family: box dimension != m");
    for (int j = 0; j < m; ++j)
      if (lower[i][j] > upper[i][j]) throw Error("family: lower > upper");
  }
}

RatVec BoundedVectorFamily::mean() const {
  RatVec mu(m, BigRat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) mu[j] += (lower[i][j] + upper[i][j]) / 2;
  return mu;
}

VectorThresholds hoeffding_vector_threshold(const BoundedVectorFamily& fam) {
  fam.validate();
  Rounder r = round_up();
  HPReal T = HPReal::of(0);
  for (int j = 0; j < fam.m; ++j) {
    BigRat sq(0);
    for (int i = 0; i < fam.n; ++i) {
      BigRat w = fam.upper[i][j] - fam.lower[i][j];
      sq += w * w;
    }
    T = r.add(T, r.sqrt(r.from(sq)));
  }
  T = r.mul(r.rat(28, 25), T);
  BigRat D(0);
  for (int i = 0; i < fam.n; ++i) {
    BigRat w(0);
    for (int j = 0; j < fam.m; ++j) w += fam.upper[i][j] - fam.lower[i][j];
    D += w * w;
  }
  return {T, r.from(D)};
}

namespace {

// 2 exp(-2 delta^2 / denom), rounded up (a valid, slightly weaker bound).
HPReal tail_value(const HPReal& delta, const HPReal& denom) {
  if (denom.sign() == 0) {
    // width-free family: the deviation is 0 almost surely
    return delta.sign() > 0 ? HPReal::of(0) : HPReal::of(2);
  }
  // an upper bound of 2 exp(-x) needs a lower bound of x = 2 delta^2 / denom
  HPReal x = hp_div(
      hp_mul(HPReal::of(2), hp_mul(delta, delta, Round::Down), Round::Down),
      denom, Round::Down);
  Rounder u = round_up();
  return u.mul(u.from(2), u.exp(hp_neg(x)));
}

}  // namespace

HPReal scalar_hoeffding_bound(const std::vector<BigRat>& widths,
                              const HPReal& delta) {
  if (delta.sign() < 0) throw Error("scalar_hoeffding_bound: delta < 0");
  BigRat denom(0);
  for (const auto& w : widths) denom += w * w;
  return tail_value(delta, HPReal::of(denom, Round::Up));
}

HPReal mcdiarmid_bound(const std::vector<BigRat>& cs, const HPReal& delta) {
  BigRat denom(0);
  for (const auto& c : cs) {
    if (c < 0) throw Error("mcdiarmid_bound: c_i < 0");
    denom += c * c;
  }
  return tail_value(delta, HPReal::of(denom, Round::Up));
}

TailReport mc_tail(const BoundedVectorFamily& fam,
                   const std::vector<double>& delta_mults, long samples,
                   uint64_t seed, int workers) {
  fam.validate();
  if (samples < 10000) throw Error("mc_tail: need at least 10^4 samples");
  TailReport rep;
  rep.thresholds = hoeffding_vector_threshold(fam);
  rep.samples = samples;
  rep.seed = seed;

  Rounder u = round_up();
  HPReal sqrtD = u.sqrt(rep.thresholds.D);
  rep.expectation_bound = u.mul(u.rat(28, 25), sqrtD);

  std::vector<double> cut(delta_mults.size());
  rep.grid.resize(delta_mults.size());
  for (size_t g = 0; g < delta_mults.size(); ++g) {
    TailPoint& tp = rep.grid[g];
    tp.delta_mult = delta_mults[g];
    tp.delta = hp_mul(HPReal::of_double(delta_mults[g]), sqrtD, Round::Nearest);
    tp.theoretical = tail_value(tp.delta, rep.thresholds.D);
    // threshold rounded down so borderline samples count against the bound
    cut[g] = hp_add(rep.thresholds.T, tp.delta, Round::Down).to_double(Round::Down);
  }

  // double images of the boxes and mean
  std::vector<std::vector<double>> lo(fam.n, std::vector<double>(fam.m));
  std::vector<std::vector<double>> hi(fam.n, std::vector<double>(fam.m));
  for (int i = 0; i < fam.n; ++i)
    for (int j = 0; j < fam.m; ++j) {
      lo[i][j] = static_cast<double>(fam.lower[i][j]);
      hi[i][j] = static_cast<double>(fam.upper[i][j]);
    }
  RatVec mu_exact = fam.mean();
  std::vector<double> mu(fam.m);
  for (int j = 0; j < fam.m; ++j) mu[j] = static_cast<double>(mu_exact[j]);

  CounterRng rng(seed);
  int nworkers = std::max(1, workers);
  size_t chunk = (static_cast<size_t>(samples) + nworkers - 1) / nworkers;
  size_t nchunks = (static_cast<size_t>(samples) + chunk - 1) / chunk;
  std::vector<std::vector<long>> hits(nchunks, std::vector<long>(cut.size(), 0));
  std::vector<double> sum_l1(nchunks, 0), sum_l1_sq(nchunks, 0);

  parallel_for(nchunks, workers, [&](size_t cb, size_t ce) {
    std::vector<double> Y(fam.m);
    for (size_t ci = cb; ci < ce; ++ci) {
      size_t rep_lo = ci * chunk;
      size_t rep_hi = std::min<size_t>(samples, rep_lo + chunk);
      for (size_t r = rep_lo; r < rep_hi; ++r) {
        std::fill(Y.begin(), Y.end(), 0.0);
        for (int i = 0; i < fam.n; ++i) {
          if (fam.law == SampleLaw::TwoPoint) {
            bool up_corner = rng.coin(r, static_cast<uint64_t>(i));
            const auto& row = up_corner ? hi[i] : lo[i];
            for (int j = 0; j < fam.m; ++j) Y[j] += row[j];
          } else {
            for (int j = 0; j < fam.m; ++j) {
              double t = rng.uniform01(r, static_cast<uint64_t>(i),
                                       static_cast<uint64_t>(j));
              Y[j] += lo[i][j] + t * (hi[i][j] - lo[i][j]);
            }
          }
        }
        double dev = 0;
        for (int j = 0; j < fam.m; ++j) dev += std::abs(Y[j] - mu[j]);
        sum_l1[ci] += dev;
        sum_l1_sq[ci] += dev * dev;
        for (size_t g = 0; g < cut.size(); ++g)
          if (dev >= cut[g]) ++hits[ci][g];
      }
    }
  });

  double total = 0, total_sq = 0;
  for (size_t ci = 0; ci < nchunks; ++ci) {
    total += sum_l1[ci];
    total_sq += sum_l1_sq[ci];
    for (size_t g = 0; g < cut.size(); ++g) rep.grid[g].hits += hits[ci][g];
  }
  double N = static_cast<double>(samples);
  rep.mean_l1 = total / N;
  double var = std::max(0.0, total_sq / N - rep.mean_l1 * rep.mean_l1);
  rep.mean_stderr = std::sqrt(var / N);
  for (auto& tp : rep.grid) {
    tp.frequency = static_cast<double>(tp.hits) / N;
    tp.stderr_ = std::sqrt(std::max(0.0, tp.frequency * (1 - tp.frequency)) / N);
  }
  return rep;
}

ExpectationCheck expectation_claim_check(const HPReal& b,
                                         const std::vector<BigRat>& alpha_grid) {
  if (b.sign() <= 0) throw Error("expectation_claim_check: b must be > 0");
  Rounder u = round_up();
  auto factor_at = [&](const BigRat& alpha) {
    // alpha + exp(-2 alpha^2) / alpha, every step rounded up
    HPReal a_lo = HPReal::of(alpha, Round::Down);
    HPReal e = u.exp(hp_neg(hp_mul(hp_mul(HPReal::of(2), a_lo, Round::Down),
                                   a_lo, Round::Down)));
    return u.add(u.from(alpha), u.div(e, a_lo));
  };
  ExpectationCheck out;
  bool first = true;
  for (const auto& alpha : alpha_grid) {
    if (alpha <= 0) throw Error("expectation_claim_check: alpha must be > 0");
    HPReal f = factor_at(alpha);
    if (first || f < out.factor) out.factor = f;
    first = false;
  }
  if (first) throw Error("expectation_claim_check: empty alpha grid");
  out.at_alpha_09 = factor_at(BigRat(9, 10));
  out.value = u.mul(out.factor, u.sqrt(b));
  out.within_claim = out.factor <= HPReal::ratio(112, 100, Round::Down);
  return out;
}

MinimizeResult thm4_constant(double lo, double hi, double tol, bool tail_form) {
  if (!(lo < hi)) throw Error("thm4_constant: bad range");
  auto denom = [&](double a) {
    return tail_form ? 1 - 2 * std::exp(-2 * a * a)
                     : 1 - 2 * std::exp(2 - 2 * a * a);
  };
  auto f = [&](double a) { return 2 * a / denom(a); };
  // clip to the denominator-positive region
  double cut = tail_form ? std::sqrt(std::log(2.0) / 2)
                         : std::sqrt(1 + std::log(2.0) / 2);
  double a = std::max(lo, cut + 1e-6), b = hi;
  if (denom(b) <= 0) throw Error("thm4_constant: denominator <= 0 on range");
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  double arg = (a + b) / 2;
  return {HPReal::of_double(f(arg)), HPReal::of_double(arg)};
}

}  // namespace ihull
