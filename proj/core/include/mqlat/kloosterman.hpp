#pragma once

#include "mqlat/residue.hpp"

namespace mqlat {

struct Cplx {
  Real re, im;

  Real abs2() const { return re * re + im * im; }
};

/// e^(2 pi i theta) for an exact rational angle, reduced mod 1 before any
/// rounding.
Cplx unit_exponential(const Rat& theta, mpfr_prec_t prec);

/// Trivial-character Kloosterman sum over the canonical order,
///   S(m1, m2; eta_u; s) = sum_{x in (O/sO)^x} e(Tr((m1 x + m2 eta_u xbar)/s)),
/// with xbar the residue inverse of x.  The angles are exact rationals; only
/// the final cosines carry rounding.  Requires m1 and m2*eta_u in the dual
/// lattice of O so the sum is independent of representatives
/// (error NotInDualLattice otherwise).  A unit modulus gives the single term
/// e(Tr((m1 + m2 eta_u)/s)).
Cplx kloosterman(const Element& m1, const Element& m2, const Element& eta_u,
                 const Element& s, mpfr_prec_t prec);

/// Same sum over a caller-supplied residue system (for representative
/// independence checks and reuse across weights).
Cplx kloosterman(const ResidueSystem& rs, const Element& m1, const Element& m2,
                 const Element& eta_u, mpfr_prec_t prec);

/// Tr(m b) in Z for every basis element b of the canonical order.
bool in_dual_of_canonical_order(const Element& m);

}  // namespace mqlat
