#include "mqlat/embedding.hpp"

#include <bit>
#include <string>

#include "mqlat/errors.hpp"

namespace mqlat {

Rat norm_sq_form(const Element& s) {
  const FieldSpec& f = s.spec();
  Rat acc(0);
  for (unsigned m = 0; m < static_cast<unsigned>(f.r); ++m) {
    if (s.coeff(m) == 0) continue;
    acc += s.coeff(m) * s.coeff(m) * Rat(f.subset_product[m]);
  }
  return Rat(f.r) * acc;
}

Rat second_symmetric(const Element& s) {
  const FieldSpec& f = s.spec();
  Rat inner(0);
  for (unsigned m = 0; m < static_cast<unsigned>(f.r); ++m)
    inner += s.coeff(m) * s.coeff(m) * Rat(f.subset_product[m]);
  Rat a0 = s.coeff(0);
  Rat half_r(f.r / 2);  // 2^(n-1)
  return Rat(f.r) * half_r * a0 * a0 - half_r * inner;
}

Rat signed_sum_bruteforce(const std::vector<Rat>& coeffs,
                          const std::vector<long long>& d) {
  const int n = static_cast<int>(d.size());
  const unsigned r = 1u << n;
  if (coeffs.size() != r)
    throw Error("WrongBasisSize", "need 2^n coefficients");
  std::vector<Int> prod(r);
  prod[0] = 1;
  for (unsigned m = 1; m < r; ++m)
    prod[m] = prod[m & (m - 1)] * Int(d[static_cast<size_t>(std::countr_zero(m))]);

  // accumulate sum_k (signed vector)^2 coefficient-wise over the formal ring
  std::vector<Rat> acc(r, Rat(0));
  for (unsigned k = 0; k < r; ++k) {
    for (unsigned s = 0; s < r; ++s) {
      if (coeffs[s] == 0) continue;
      Rat cs = (std::popcount(s & k) & 1) ? Rat(-coeffs[s]) : coeffs[s];
      for (unsigned t = 0; t < r; ++t) {
        if (coeffs[t] == 0) continue;
        Rat ct = (std::popcount(t & k) & 1) ? Rat(-coeffs[t]) : coeffs[t];
        acc[s ^ t] += cs * ct * Rat(prod[s & t]);
      }
    }
  }
  for (unsigned m = 1; m < r; ++m)
    if (acc[m] != 0)
      throw Error("DomainError", "signed sum left a radical term, mask " +
                                     std::to_string(m));
  return acc[0];
}

bool GramMatrix::positive_definite() const {
  // Sylvester: all leading principal minors > 0, evaluated exactly
  for (int k = 1; k <= r; ++k) {
    std::vector<Rat> sub(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[static_cast<size_t>(i) * k + j] = at(i, j);
    Int den(1);
    for (const auto& x : sub) den = lcm(den, x.get_den());
    std::vector<Int> mi(sub.size());
    for (size_t i = 0; i < sub.size(); ++i) mi[i] = Rat(sub[i] * Rat(den)).get_num();
    if (sgn(det_bareiss(std::move(mi), k)) <= 0) return false;
  }
  return true;
}

Int GramMatrix::det_scaled(Int* den_out) const {
  Int den(1);
  for (const auto& x : a) den = lcm(den, x.get_den());
  std::vector<Int> mi(a.size());
  for (size_t i = 0; i < a.size(); ++i) mi[i] = Rat(a[i] * Rat(den)).get_num();
  if (den_out) *den_out = den;
  return det_bareiss(std::move(mi), r);
}

Rat GramMatrix::det() const {
  Int den;
  Int d = det_scaled(&den);
  Int dp;
  mpz_pow_ui(dp.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(r));
  return Rat(d) / Rat(dp);
}

GramMatrix gram_matrix(const std::vector<Element>& basis) {
  if (basis.empty()) throw Error("WrongBasisSize", "empty basis");
  const FieldSpec& f = basis[0].spec();
  if (!f.totally_real)
    throw Error("NotTotallyReal", "Gram matrices need a totally real field");
  if (static_cast<int>(basis.size()) != f.r)
    throw Error("WrongBasisSize", "expected " + std::to_string(f.r) +
                                      " basis elements, got " +
                                      std::to_string(basis.size()));
  GramMatrix g;
  g.r = f.r;
  g.a.assign(static_cast<size_t>(f.r) * f.r, Rat(0));
  for (int i = 0; i < f.r; ++i)
    for (int j = i; j < f.r; ++j) {
      Rat acc(0);
      for (unsigned m = 0; m < static_cast<unsigned>(f.r); ++m) {
        const Rat& ci = basis[static_cast<size_t>(i)].coeff(m);
        const Rat& cj = basis[static_cast<size_t>(j)].coeff(m);
        if (ci == 0 || cj == 0) continue;
        acc += ci * cj * Rat(f.subset_product[m]);
      }
      acc *= Rat(f.r);
      g.at(i, j) = acc;
      g.at(j, i) = acc;
    }
  return g;
}

namespace {

Real root_bound(const Element& s, const Rat& constant, mpfr_prec_t prec) {
  if (s.is_zero()) throw Error("ZeroElement", "bound of zero element");
  if (!s.spec().totally_real)
    throw Error("NotTotallyReal", "bound needs a totally real field");
  Rat nm = s.norm();
  if (nm < 0) nm = -nm;
  // round everything down so the result is a true lower bound
  Real v = Real::of(nm, prec, MPFR_RNDD);
  Real root = rootn(v, static_cast<unsigned long>(s.spec().r), MPFR_RNDD);
  Real c = Real::of(constant, prec, MPFR_RNDD);
  Real csqrt = sqrt(c, MPFR_RNDD);
  return mul(root, csqrt, MPFR_RNDD);
}

}  // namespace

Real amgm_lower_bound(const Element& s, mpfr_prec_t prec) {
  return root_bound(s, Rat(s.spec().r), prec);
}

Real principal_min_lower_bound(const Element& gen, mpfr_prec_t prec) {
  return amgm_lower_bound(gen, prec);
}

PrincipalMinBounds principal_min_bounds(const Element& gen, mpfr_prec_t prec) {
  PrincipalMinBounds b{amgm_lower_bound(gen, prec), Real(prec)};
  Rat printed_sq(Int(1) << (2 * (gen.spec().n - 1)));  // (2^(n-1))^2
  b.printed_bound = root_bound(gen, printed_sq, prec);
  return b;
}

bool amgm_bound_holds_exact(const Element& s) {
  // r * |Nm|^(2/r) <= Q  <=>  r^r * Nm^2 <= Q^r  (all quantities positive)
  const int r = s.spec().r;
  Rat nm = s.norm();
  Rat q = norm_sq_form(s);
  Rat lhs = nm * nm;
  Int rr;
  mpz_ui_pow_ui(rr.get_mpz_t(), static_cast<unsigned long>(r),
                static_cast<unsigned long>(r));
  lhs *= Rat(rr);
  Rat rhs(1);
  for (int i = 0; i < r; ++i) rhs *= q;
  return lhs <= rhs;
}

}  // namespace mqlat
