#pragma once

#include <mpfr.h>

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace ihull {

/// Arbitrary-precision signed integer. Exact; no silent overflow.
using BigInt = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (the gmp backend canonicalizes on every op).
using BigRat = boost::multiprecision::mpq_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Input file or argument could not be parsed.
struct ParseError : Error {
  using Error::Error;
};
/// A search/enumeration budget would be exceeded; the operation refuses
/// rather than truncating.
struct BudgetError : Error {
  using Error::Error;
};
/// Instance is infeasible, unbounded or otherwise degenerate for the
/// requested operation.
struct InfeasibleError : Error {
  using Error::Error;
};

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt floor_rat(const BigRat& q);
BigInt ceil_rat(const BigRat& q);
BigInt pow_int(const BigInt& base, unsigned long exp);

/// floor(log2(x)) for x >= 1, exact.
long floor_log2(const BigInt& x);
/// ceil(log2(x)) for x >= 1, exact.
long ceil_log2(const BigInt& x);

enum class Round { Nearest, Up, Down };

mpfr_rnd_t to_mpfr(Round r);

/// 128-bit binary floating value with per-operation directed rounding.
///
/// All bound formulas in this library are monotone nondecreasing in each
/// positive subterm, so evaluating every step with Round::Up (resp. Down)
/// yields a rigorous upper (resp. lower) enclosure of the exact value.
class HPReal {
 public:
  static constexpr mpfr_prec_t kPrecision = 128;

  HPReal() {
    mpfr_init2(v_, kPrecision);
    mpfr_set_nan(v_);
  }
  HPReal(const HPReal& o) {
    mpfr_init2(v_, kPrecision);
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  HPReal(HPReal&& o) noexcept {
    mpfr_init2(v_, kPrecision);
    mpfr_swap(v_, o.v_);
  }
  HPReal& operator=(HPReal o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~HPReal() { mpfr_clear(v_); }

  static HPReal of(long x);
  static HPReal of(const BigInt& x, Round r);
  static HPReal of(const BigRat& x, Round r);
  static HPReal of_double(double x);
  /// num/den as an exact rational, then one directed rounding.
  static HPReal ratio(long num, long den, Round r);
  static HPReal pow2(long e);  // exact 2^e

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double(Round r = Round::Nearest) const {
    return mpfr_get_d(v_, to_mpfr(r));
  }
  /// Decimal rendering with enough digits to round-trip (~40).
  std::string str(int digits = 40) const;

  int cmp(const HPReal& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const HPReal& o) const { return cmp(o) < 0; }
  bool operator<=(const HPReal& o) const { return cmp(o) <= 0; }
  bool operator>(const HPReal& o) const { return cmp(o) > 0; }
  bool operator>=(const HPReal& o) const { return cmp(o) >= 0; }
  bool operator==(const HPReal& o) const { return cmp(o) == 0; }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

HPReal hp_add(const HPReal& a, const HPReal& b, Round r);
HPReal hp_sub(const HPReal& a, const HPReal& b, Round r);
HPReal hp_mul(const HPReal& a, const HPReal& b, Round r);
HPReal hp_div(const HPReal& a, const HPReal& b, Round r);
HPReal hp_sqrt(const HPReal& a, Round r);
HPReal hp_log2(const HPReal& a, Round r);
HPReal hp_exp(const HPReal& a, Round r);
HPReal hp_exp2(const HPReal& a, Round r);
HPReal hp_neg(const HPReal& a);
HPReal hp_abs(const HPReal& a);
/// ceil of a finite HPReal, exact.
BigInt hp_ceil(const HPReal& a);

/// Directed-rounding evaluator for monotone bound formulas: every
/// operation rounds in the same direction `dir`.
struct Rounder {
  Round dir;

  HPReal from(long x) const { return HPReal::of(x); }
  HPReal from(const BigInt& x) const { return HPReal::of(x, dir); }
  HPReal from(const BigRat& x) const { return HPReal::of(x, dir); }
  HPReal rat(long n, long d) const { return HPReal::ratio(n, d, dir); }
  HPReal add(const HPReal& a, const HPReal& b) const { return hp_add(a, b, dir); }
  HPReal mul(const HPReal& a, const HPReal& b) const { return hp_mul(a, b, dir); }
  HPReal div(const HPReal& a, const HPReal& b) const { return hp_div(a, b, dir); }
  HPReal sqrt(const HPReal& a) const { return hp_sqrt(a, dir); }
  HPReal log2(const HPReal& a) const { return hp_log2(a, dir); }
  HPReal exp(const HPReal& a) const { return hp_exp(a, dir); }
  HPReal exp2(const HPReal& a) const { return hp_exp2(a, dir); }
  /// Euler's number, directed.
  HPReal e() const { return hp_exp(HPReal::of(1), dir); }
};

inline Rounder round_up() { return Rounder{Round::Up}; }
inline Rounder round_down() { return Rounder{Round::Down}; }
inline Rounder round_near() { return Rounder{Round::Nearest}; }

}  // namespace ihull
