#include "mqlat/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>

#include "mqlat/errors.hpp"

namespace mqlat {

Real Real::of(const Rat& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_q(r.v_, x.get_mpq_t(), rnd);
  return r;
}

Real Real::of(const Int& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_z(r.v_, x.get_mpz_t(), rnd);
  return r;
}

Real Real::of(long x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::of_double(double x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_const_pi(r.v_, rnd);
  return r;
}

std::string Real::str(size_t digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  if (digits == 0)
    digits = static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 2;
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  bool negv = !mant.empty() && mant[0] == '-';
  std::string dig = negv ? mant.substr(1) : mant;
  while (dig.size() > 1 && dig.back() == '0') dig.pop_back();
  // mantissa is 0.dig * 10^e; print as d.ddd'e'(e-1)
  std::string out = dig.substr(0, 1);
  if (dig.size() > 1) out += "." + dig.substr(1);
  long ee = static_cast<long>(e) - 1;
  if (ee != 0) out += "e" + std::to_string(ee);
  return (negv ? "-" : "") + out;
}

Real add(const Real& a, const Real& b, mpfr_rnd_t r) {
  Real out(std::max(a.prec(), b.prec()));
  mpfr_add(out.v_, a.v_, b.v_, r);
  return out;
}
Real sub(const Real& a, const Real& b, mpfr_rnd_t r) {
  Real out(std::max(a.prec(), b.prec()));
  mpfr_sub(out.v_, a.v_, b.v_, r);
  return out;
}
Real mul(const Real& a, const Real& b, mpfr_rnd_t r) {
  Real out(std::max(a.prec(), b.prec()));
  mpfr_mul(out.v_, a.v_, b.v_, r);
  return out;
}
Real div(const Real& a, const Real& b, mpfr_rnd_t r) {
  Real out(std::max(a.prec(), b.prec()));
  mpfr_div(out.v_, a.v_, b.v_, r);
  return out;
}
Real sqrt(const Real& a, mpfr_rnd_t r) {
  Real out(a.prec());
  mpfr_sqrt(out.v_, a.v_, r);
  return out;
}
Real rootn(const Real& a, unsigned long n, mpfr_rnd_t r) {
  Real out(a.prec());
  mpfr_rootn_ui(out.v_, a.v_, n, r);
  return out;
}
Real neg(const Real& a) {
  Real out(a.prec());
  mpfr_neg(out.v_, a.v_, MPFR_RNDN);
  return out;
}
Real abs(const Real& a) {
  Real out(a.prec());
  mpfr_abs(out.v_, a.v_, MPFR_RNDN);
  return out;
}

Interval Interval::of(const Rat& x, mpfr_prec_t prec) {
  return Interval{Real::of(x, prec, MPFR_RNDD), Real::of(x, prec, MPFR_RNDU)};
}

Interval Interval::of(const Real& x) { return Interval{x, x}; }

Interval Interval::pi(mpfr_prec_t prec) {
  return Interval{Real::pi(prec, MPFR_RNDD), Real::pi(prec, MPFR_RNDU)};
}

Interval Interval::operator+(const Interval& o) const {
  return Interval{add(lo, o.lo, MPFR_RNDD), add(hi, o.hi, MPFR_RNDU)};
}

Interval Interval::operator-(const Interval& o) const {
  return Interval{sub(lo, o.hi, MPFR_RNDD), sub(hi, o.lo, MPFR_RNDU)};
}

Interval Interval::operator*(const Interval& o) const {
  const Real* xs[2] = {&lo, &hi};
  const Real* ys[2] = {&o.lo, &o.hi};
  Real lo_out = mul(lo, o.lo, MPFR_RNDD);
  Real hi_out = mul(lo, o.lo, MPFR_RNDU);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Real d = mul(*xs[i], *ys[j], MPFR_RNDD);
      Real u = mul(*xs[i], *ys[j], MPFR_RNDU);
      if (d < lo_out) lo_out = d;
      if (u > hi_out) hi_out = u;
    }
  return Interval{lo_out, hi_out};
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero())
    throw Error("DomainError", "interval division by an interval containing 0");
  const Real* xs[2] = {&lo, &hi};
  const Real* ys[2] = {&o.lo, &o.hi};
  Real lo_out = div(lo, o.lo, MPFR_RNDD);
  Real hi_out = div(lo, o.lo, MPFR_RNDU);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Real d = div(*xs[i], *ys[j], MPFR_RNDD);
      Real u = div(*xs[i], *ys[j], MPFR_RNDU);
      if (d < lo_out) lo_out = d;
      if (u > hi_out) hi_out = u;
    }
  return Interval{lo_out, hi_out};
}

Interval Interval::sqrt_() const {
  Real l = lo;
  if (l.sgn() < 0) l = Real::of(0L, prec());
  return Interval{sqrt(l, MPFR_RNDD), sqrt(hi, MPFR_RNDU)};
}

Interval Interval::abs_() const {
  if (lo.sgn() >= 0) return *this;
  if (hi.sgn() <= 0) return Interval{neg(hi), neg(lo)};
  Real m = neg(lo);
  if (hi > m) m = hi;
  return Interval{Real::of(0L, prec()), m};
}

}  // namespace mqlat
