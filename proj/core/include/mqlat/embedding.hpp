#pragma once

#include <vector>

#include "mqlat/bigfloat.hpp"
#include "mqlat/element.hpp"

namespace mqlat {

/// ||sigma(s)||^2 = 2^n * sum_S c_S^2 d_S, exact.  For totally real fields
/// this equals the sum of the squared real embeddings; for other fields it is
/// the formal value of the same expression.
Rat norm_sq_form(const Element& s);

/// sum_{i<j} sigma_i(s) sigma_j(s) via the closed form
/// 2^(2n-1) a(0)^2 - 2^(n-1) (a(0)^2 + sum d_i b(i)^2 + sum c^2 prod d).
Rat second_symmetric(const Element& s);

/// Literal evaluation of the 2^n-term signed sum of squares
/// sum_k (sum_S (-1)^{|S & k|} c_S sqrt(d_S))^2 in the formal radical ring.
/// Serves as the identity oracle for the closed form; accepts any d list
/// (negative entries and square subset products included).
Rat signed_sum_bruteforce(const std::vector<Rat>& coeffs,
                          const std::vector<long long>& d);

/// Symmetric r x r matrix of exact rationals; row-major storage.
struct GramMatrix {
  int r = 0;
  std::vector<Rat> a;

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * r + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * r + j]; }

  /// All leading principal minors positive (exact); Sylvester's criterion.
  bool positive_definite() const;
  Int det_scaled(Int* den = nullptr) const;  // determinant with denominator
  Rat det() const;
};

/// G_ij = <sigma(b_i), sigma(b_j)> = 2^n sum_S c_S(b_i) c_S(b_j) d_S.
/// Errors: NotTotallyReal, WrongBasisSize.
GramMatrix gram_matrix(const std::vector<Element>& basis);

/// sqrt(r) * |Nm(s)|^(1/r), rounded down; a lower bound for ||sigma(s)||.
/// Errors: ZeroElement, NotTotallyReal.
Real amgm_lower_bound(const Element& s, mpfr_prec_t precision_bits);

struct PrincipalMinBounds {
  Real lemma_bound;    // sqrt(r) * |Nm(gen)|^(1/r), the provable bound
  Real printed_bound;  // 2^(n-1) * |Nm(gen)|^(1/r), the constant as printed
};

/// Lower bound for min(<gen>); returns the lemma-derived bound.  The printed
/// companion constant 2^(n-1) disagrees with sqrt(r) = 2^(n/2) for n != 2, so
/// both are exposed via principal_min_bounds.
Real principal_min_lower_bound(const Element& gen, mpfr_prec_t precision_bits);
PrincipalMinBounds principal_min_bounds(const Element& gen, mpfr_prec_t precision_bits);

/// Exact comparison r^r * Nm(s)^2 <= norm_sq_form(s)^r, i.e. the squared AM-GM
/// bound against the squared length, with no rounding anywhere.
bool amgm_bound_holds_exact(const Element& s);

}  // namespace mqlat
