#include "lgg/interval.hpp"

#include <vector>

namespace lgg {

Rational Real::to_rational() const {
  if (!mpfr_number_p(v_)) fail(ErrorKind::BadParameter, "non-finite value has no rational form");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return Rational(q.get_num(), q.get_den());
}

std::string Real::str(int significant_digits) const {
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dRg", significant_digits);
  char* s = nullptr;
  if (mpfr_asprintf(&s, fmt, v_) < 0) fail(ErrorKind::BadParameter, "mpfr formatting failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

double Interval::width() const {
  Real w = Real::sub(hi, lo, mpfr_get_prec(hi.raw()), MPFR_RNDU);
  return w.to_double();
}

bool Interval::contains_sqrt(const Rational& q) const {
  if (q.sign() < 0) return false;
  // lo <= sqrt(q): true when lo < 0, else lo^2 <= q, exactly.
  bool lo_ok = lo.sign() < 0;
  if (!lo_ok) {
    Rational l = lo.to_rational();
    lo_ok = l * l <= q;
  }
  if (!lo_ok) return false;
  // sqrt(q) <= hi: requires hi >= 0 and q <= hi^2.
  if (hi.sign() < 0) return false;
  Rational h = hi.to_rational();
  return q <= h * h;
}

}  // namespace lgg
