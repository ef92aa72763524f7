#pragma once

#include <mpfr.h>

#include <string>

#include "mqlat/numeric.hpp"

namespace mqlat {

/// Arbitrary-precision real number backed by MPFR.  Value semantics; every
/// instance carries its own precision.  Arithmetic rounds to nearest unless a
/// rounding mode is passed explicitly.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  static Real of(const Rat& x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real of(const Int& x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real of(long x, mpfr_prec_t prec);
  static Real of_double(double x, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal string; deterministic for a fixed value and precision.
  std::string str(size_t digits = 0) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  // Rounded arithmetic at the receiver's precision.
  friend Real add(const Real& a, const Real& b, mpfr_rnd_t r = MPFR_RNDN);
  friend Real sub(const Real& a, const Real& b, mpfr_rnd_t r = MPFR_RNDN);
  friend Real mul(const Real& a, const Real& b, mpfr_rnd_t r = MPFR_RNDN);
  friend Real div(const Real& a, const Real& b, mpfr_rnd_t r = MPFR_RNDN);
  friend Real sqrt(const Real& a, mpfr_rnd_t r = MPFR_RNDN);
  friend Real rootn(const Real& a, unsigned long n, mpfr_rnd_t r = MPFR_RNDN);
  friend Real neg(const Real& a);
  friend Real abs(const Real& a);

  Real operator+(const Real& o) const { return add(*this, o); }
  Real operator-(const Real& o) const { return sub(*this, o); }
  Real operator*(const Real& o) const { return mul(*this, o); }
  Real operator/(const Real& o) const { return div(*this, o); }
  Real operator-() const { return neg(*this); }

  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const Real& o) const { return cmp(o) < 0; }
  bool operator<=(const Real& o) const { return cmp(o) <= 0; }
  bool operator>(const Real& o) const { return cmp(o) > 0; }
  bool operator>=(const Real& o) const { return cmp(o) >= 0; }
  bool operator==(const Real& o) const { return cmp(o) == 0; }

 private:
  mpfr_t v_;
};

/// Closed interval [lo, hi] with outward rounding on every operation.
struct Interval {
  Real lo, hi;

  static Interval of(const Rat& x, mpfr_prec_t prec);
  static Interval of(const Real& x);
  static Interval point(const Real& x) { return Interval{x, x}; }
  static Interval pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return lo.prec(); }
  bool contains_zero() const { return lo.sgn() <= 0 && hi.sgn() >= 0; }
  bool positive() const { return lo.sgn() > 0; }
  bool negative() const { return hi.sgn() < 0; }
  /// True iff every point of *this is strictly below every point of o.
  bool strictly_below(const Interval& o) const { return hi < o.lo; }
  Real width() const { return sub(hi, lo, MPFR_RNDU); }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // requires !o.contains_zero()
  Interval sqrt_() const;                       // clamps lo at 0
  Interval abs_() const;
};

}  // namespace mqlat
