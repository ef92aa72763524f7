#include "mqlat/kloosterman.hpp"

#include "mqlat/errors.hpp"

namespace mqlat {

Cplx unit_exponential(const Rat& theta, mpfr_prec_t prec) {
  Rat t = theta;
  // reduce mod 1 exactly
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
  t -= Rat(fl);
  Real angle = mul(mul(Real::of(2L, prec + 16), Real::pi(prec + 16)),
                   Real::of(t, prec + 16));
  Cplx out{Real(prec), Real(prec)};
  Real c(prec + 16), s(prec + 16);
  mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
  mpfr_set(out.re.raw(), c.raw(), MPFR_RNDN);
  mpfr_set(out.im.raw(), s.raw(), MPFR_RNDN);
  return out;
}

bool in_dual_of_canonical_order(const Element& m) {
  // Tr(m sqrt(d_T)) = 2^n m_T d_T must be an integer for every mask T
  const FieldSpec& f = m.spec();
  for (unsigned t = 0; t < static_cast<unsigned>(f.r); ++t) {
    Rat v = Rat(f.r) * m.coeff(t) * Rat(f.subset_product[t]);
    if (v.get_den() != 1) return false;
  }
  return true;
}

Cplx kloosterman(const ResidueSystem& rs, const Element& m1, const Element& m2,
                 const Element& eta_u, mpfr_prec_t prec) {
  Element m2eta = m2 * eta_u;
  if (!in_dual_of_canonical_order(m1) || !in_dual_of_canonical_order(m2eta))
    throw Error("NotInDualLattice",
                "m1 and m2*eta*u must lie in the dual of the canonical order");
  const Element& s = rs.modulus();
  Element s_inv = s.inverse();
  mpfr_prec_t work = prec + 32;
  Real re = Real::of(0L, work), im = Real::of(0L, work);
  if (rs.quotient_size() == 1) {
    Rat theta = ((m1 + m2eta) * s_inv).trace();
    Cplx term = unit_exponential(theta, work);
    re = term.re;
    im = term.im;
  } else {
    for (size_t i = 0; i < rs.units().size(); ++i) {
      const Element& x = rs.units()[i];
      const Element& xbar = rs.unit_inverse(i);
      Rat theta = ((m1 * x + m2eta * xbar) * s_inv).trace();
      Cplx term = unit_exponential(theta, work);
      re = re + term.re;
      im = im + term.im;
    }
  }
  Cplx out{Real(prec), Real(prec)};
  mpfr_set(out.re.raw(), re.raw(), MPFR_RNDN);
  mpfr_set(out.im.raw(), im.raw(), MPFR_RNDN);
  return out;
}

Cplx kloosterman(const Element& m1, const Element& m2, const Element& eta_u,
                 const Element& s, mpfr_prec_t prec) {
  ResidueSystem rs = residue_units(s.field(), s);
  return kloosterman(rs, m1, m2, eta_u, prec);
}

}  // namespace mqlat
