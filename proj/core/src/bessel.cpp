#include "mqlat/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mqlat/errors.hpp"

namespace mqlat {

namespace {

// Ascending series sum_m (-1)^m (x/2)^(nu+2m) / (m! (nu+m)!).  Used only where
// the term ratio stays below ~1, so cancellation is bounded by a few bits.
Real series_j(unsigned long nu, const Real& x, mpfr_prec_t w) {
  Real half_x = div(Real::of(0L, w) + x, Real::of(2L, w));
  mpfr_prec_t ww = w;
  Real term(ww), sum(ww), x2q(ww), fac(ww);
  mpfr_pow_ui(term.raw(), half_x.raw(), nu, MPFR_RNDN);
  mpfr_fac_ui(fac.raw(), nu, MPFR_RNDN);
  mpfr_div(term.raw(), term.raw(), fac.raw(), MPFR_RNDN);
  mpfr_mul(x2q.raw(), half_x.raw(), half_x.raw(), MPFR_RNDN);
  sum = term;
  for (unsigned long m = 1;; ++m) {
    // term *= -x^2/4 / (m (nu+m))
    Real den = Real::of(static_cast<long>(m), ww) *
               Real::of(static_cast<long>(nu + m), ww);
    term = div(mul(term, x2q), den);
    mpfr_neg(term.raw(), term.raw(), MPFR_RNDN);
    Real next = sum + term;
    if (mpfr_cmpabs(term.raw(), sum.raw()) < 0) {
      Real ratio = div(abs(term), abs(sum));
      Real eps(ww);
      mpfr_set_ui_2exp(eps.raw(), 1, -static_cast<mpfr_exp_t>(ww - 4), MPFR_RNDN);
      if (ratio < eps) return next;
    }
    sum = next;
    if (m > static_cast<unsigned long>(ww) + 64)
      throw Error("DomainError", "Bessel series failed to converge");
  }
}

// One backward-recurrence pass: f_{k-1} = (2k/x) f_k - f_{k+1} seeded above
// start, normalized by f_0 + 2 sum_{m>=1} f_{2m} = 1.
Real miller_j(unsigned long nu, const Real& x, mpfr_prec_t w, unsigned long start) {
  if (start % 2) ++start;
  Real fkp1 = Real::of(0L, w);
  Real fk(w);
  mpfr_set_ui_2exp(fk.raw(), 1, -static_cast<mpfr_exp_t>(w), MPFR_RNDN);
  Real norm = Real::of(0L, w);
  Real wanted = Real::of(0L, w);
  Real two_over_x = div(Real::of(2L, w), x);
  if (start == nu) wanted = fk;
  for (unsigned long k = start; k >= 1; --k) {
    Real fkm1 = sub(mul(mul(Real::of(static_cast<long>(k), w), two_over_x), fk), fkp1);
    fkp1 = fk;
    fk = fkm1;
    unsigned long idx = k - 1;
    if (idx == nu) wanted = fk;
    if (idx >= 2 && idx % 2 == 0) norm = norm + fk + fk;
  }
  norm = norm + fk;  // f_0
  return div(wanted, norm);
}

unsigned long start_margin(unsigned long base, mpfr_prec_t w) {
  // decay beyond the turning point goes like exp(-c (m / base^(1/3))^(3/2));
  // solve for m giving 2^-(w+32) and pad
  double b13 = std::cbrt(static_cast<double>(std::max<unsigned long>(base, 8)));
  double bits = static_cast<double>(w) + 32.0;
  double m = b13 * std::pow(1.3 * bits, 2.0 / 3.0);
  return 64 + static_cast<unsigned long>(m);
}

}  // namespace

Real bessel_j(unsigned long order, const Real& x, mpfr_prec_t prec) {
  if (order > 1000000ul)
    throw Error("DomainError", "Bessel order above 10^6");
  if (x.sgn() < 0) throw Error("DomainError", "Bessel argument must be >= 0");
  if (Real::of(10000000L, 64) < x)
    throw Error("DomainError", "Bessel argument above 10^7");
  if (x.is_zero()) return Real::of(order == 0 ? 1L : 0L, prec);

  // series region: term ratio <= 1 throughout, no zeros of J in range
  bool small_x = x <= Real::of(2L, 64);
  if (!small_x) {
    Real xx = mul(x, x);
    small_x = xx <= Real::of(static_cast<long>(2 * (order + 1)), 64);
  }
  if (small_x) {
    mpfr_prec_t w = prec + 64;
    for (;;) {
      Real s = series_j(order, x, w);
      // guard against unexpected cancellation: |sum| must clear the first
      // term's magnitude by a sane margin
      if (!s.is_zero()) {
        Real out(prec);
        mpfr_set(out.raw(), s.raw(), MPFR_RNDN);
        return out;
      }
      w *= 2;
    }
  }

  // backward recurrence; validate by agreement between two runs
  double xd = mpfr_get_d(x.raw(), MPFR_RNDU);
  unsigned long base = std::max<unsigned long>(order, static_cast<unsigned long>(xd) + 1);
  mpfr_prec_t w = prec + 64;
  unsigned long margin = start_margin(base, w);
  for (int tries = 0; tries < 24; ++tries) {
    Real a = miller_j(order, x, w, base + margin);
    Real b = miller_j(order, x, w + 64, base + margin + margin / 2 + 64);
    // relative agreement to 2^-(prec+8)
    Real diff = abs(sub(a, b));
    Real tol(w);
    mpfr_set_ui_2exp(tol.raw(), 1, -static_cast<mpfr_exp_t>(prec + 8), MPFR_RNDN);
    if (b.is_zero()) {
      if (diff.is_zero()) {
        Real out(prec);
        mpfr_set(out.raw(), b.raw(), MPFR_RNDN);
        return out;
      }
    } else if (diff < mul(tol, abs(b))) {
      Real out(prec);
      mpfr_set(out.raw(), b.raw(), MPFR_RNDN);
      return out;
    }
    margin *= 2;
    w += w / 2;
  }
  throw Error("DomainError", "Bessel evaluation failed to stabilize");
}

}  // namespace mqlat
