#pragma once

#include <mpfr.h>

#include <string>

#include "lgg/rational.hpp"

namespace lgg {

/// RAII wrapper around an mpfr scalar. All operations take an explicit
/// rounding mode; the dilation pipeline evaluates every quantity twice,
/// rounding down for lower bounds and up for upper bounds.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  static Real of_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), rnd);
    return r;
  }
  /// Directed sqrt of an exact rational.
  static Real sqrt_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r = of_rational(q, prec, rnd);
    mpfr_sqrt(r.v_, r.v_, rnd);
    return r;
  }

  void add(const Real& o, mpfr_rnd_t rnd) { mpfr_add(v_, v_, o.v_, rnd); }
  static Real div(const Real& a, const Real& b, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_div(r.v_, a.v_, b.v_, rnd);
    return r;
  }
  static Real sub(const Real& a, const Real& b, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_sub(r.v_, a.v_, b.v_, rnd);
    return r;
  }
  static Real mul(const Real& a, const Real& b, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_mul(r.v_, a.v_, b.v_, rnd);
    return r;
  }

  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  int cmp(const Rational& q) const { return mpfr_cmp_q(v_, q.raw().get_mpq_t()); }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Exact rational value of this binary float (mpfr values are dyadic).
  Rational to_rational() const;

  std::string str(int significant_digits = 17) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

inline bool operator<(const Real& a, const Real& b) { return a.cmp(b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return a.cmp(b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return a.cmp(b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return a.cmp(b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return a.cmp(b) == 0; }

/// Closed interval [lo, hi] guaranteed to contain the exact value it stands
/// for. A default-constructed interval is [0, 0].
struct Interval {
  Real lo;
  Real hi;

  double width() const;
  bool contains(const Rational& q) const { return lo.cmp(q) <= 0 && hi.cmp(q) >= 0; }
  /// Exact comparison against sqrt(q) by squaring (q >= 0): the fallback
  /// used when an endpoint straddles a radical.
  bool contains_sqrt(const Rational& q) const;
  bool certainly_less(const Interval& o) const { return hi.cmp(o.lo) < 0; }
  bool certainly_le(const Rational& q) const { return hi.cmp(q) <= 0; }
  bool certainly_ge(const Rational& q) const { return lo.cmp(q) >= 0; }
};

}  // namespace lgg
