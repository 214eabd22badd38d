#include "ihull/numeric.hpp"

#include <cassert>
#include <vector>

namespace ihull {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

BigInt floor_rat(const BigRat& q) {
  return floor_div(numerator(q), denominator(q));
}

BigInt ceil_rat(const BigRat& q) {
  return ceil_div(numerator(q), denominator(q));
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), exp);
  return r;
}

long floor_log2(const BigInt& x) {
  if (x < 1) throw Error("floor_log2: argument must be >= 1");
  return static_cast<long>(mpz_sizeinbase(x.backend().data(), 2)) - 1;
}

long ceil_log2(const BigInt& x) {
  long f = floor_log2(x);
  bool pow2 = mpz_popcount(x.backend().data()) == 1;
  return pow2 ? f : f + 1;
}

mpfr_rnd_t to_mpfr(Round r) {
  switch (r) {
    case Round::Up:
      return MPFR_RNDU;
    case Round::Down:
      return MPFR_RNDD;
    default:
      return MPFR_RNDN;
  }
}

HPReal HPReal::of(long x) {
  HPReal h;
  mpfr_set_si(h.v_, x, MPFR_RNDN);  // exact at 128 bits
  return h;
}

HPReal HPReal::of(const BigInt& x, Round r) {
  HPReal h;
  mpfr_set_z(h.v_, x.backend().data(), to_mpfr(r));
  return h;
}

HPReal HPReal::of(const BigRat& x, Round r) {
  HPReal h;
  mpfr_set_q(h.v_, x.backend().data(), to_mpfr(r));
  return h;
}

HPReal HPReal::of_double(double x) {
  HPReal h;
  mpfr_set_d(h.v_, x, MPFR_RNDN);  // exact
  return h;
}

HPReal HPReal::ratio(long num, long den, Round r) {
  return of(BigRat(num, den), r);
}

HPReal HPReal::pow2(long e) {
  HPReal h;
  mpfr_set_si_2exp(h.v_, 1, e, MPFR_RNDN);
  return h;
}

std::string HPReal::str(int digits) const {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
  return buf;
}

HPReal hp_add(const HPReal& a, const HPReal& b, Round r) {
  HPReal h;
  mpfr_add(h.raw(), a.raw(), b.raw(), to_mpfr(r));
  return h;
}

HPReal hp_sub(const HPReal& a, const HPReal& b, Round r) {
  HPReal h;
  mpfr_sub(h.raw(), a.raw(), b.raw(), to_mpfr(r));
  return h;
}

HPReal hp_mul(const HPReal& a, const HPReal& b, Round r) {
  HPReal h;
  mpfr_mul(h.raw(), a.raw(), b.raw(), to_mpfr(r));
  return h;
}

HPReal hp_div(const HPReal& a, const HPReal& b, Round r) {
  HPReal h;
  mpfr_div(h.raw(), a.raw(), b.raw(), to_mpfr(r));
  return h;
}

HPReal hp_sqrt(const HPReal& a, Round r) {
  HPReal h;
  mpfr_sqrt(h.raw(), a.raw(), to_mpfr(r));
  return h;
}

HPReal hp_log2(const HPReal& a, Round r) {
  HPReal h;
  mpfr_log2(h.raw(), a.raw(), to_mpfr(r));
  return h;
}

HPReal hp_exp(const HPReal& a, Round r) {
  HPReal h;
  mpfr_exp(h.raw(), a.raw(), to_mpfr(r));
  return h;
}

HPReal hp_exp2(const HPReal& a, Round r) {
  HPReal h;
  mpfr_exp2(h.raw(), a.raw(), to_mpfr(r));
  return h;
}

HPReal hp_neg(const HPReal& a) {
  HPReal h;
  mpfr_neg(h.raw(), a.raw(), MPFR_RNDN);
  return h;
}

HPReal hp_abs(const HPReal& a) {
  HPReal h;
  mpfr_abs(h.raw(), a.raw(), MPFR_RNDN);
  return h;
}

BigInt hp_ceil(const HPReal& a) {
  if (a.is_nan() || mpfr_inf_p(a.raw())) throw Error("hp_ceil: not finite");
  BigInt z;
  mpfr_get_z(z.backend().data(), a.raw(), MPFR_RNDU);
  return z;
}

}  // namespace ihull
