#pragma once

#include <vector>

#include "mqlat/bigfloat.hpp"
#include "mqlat/field.hpp"
#include "mqlat/numeric.hpp"

namespace mqlat {

/// A field element as 2^n exact rational coefficients on the radical basis
/// {sqrt(d_S)}.  Immutable after construction; all operations are pure.
class Element {
 public:
  Element(FieldPtr field, std::vector<Rat> coeffs);

  static Element zero(FieldPtr f);
  static Element one(FieldPtr f);
  static Element rational(FieldPtr f, const Rat& x);
  /// x * sqrt(d_S) for the basis radical of the given mask.
  static Element radical(FieldPtr f, unsigned mask, const Rat& x = Rat(1));

  const FieldPtr& field() const { return field_; }
  const FieldSpec& spec() const { return *field_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& coeff(unsigned mask) const { return coeffs_[mask]; }

  bool is_zero() const;
  bool is_rational() const;  // only the empty-mask coefficient may be nonzero
  int nonzero_count() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  Element scalar_mul(const Rat& t) const;
  bool operator==(const Element& o) const;

  /// Multiplicative inverse in the field; error ZeroElement on 0.
  Element inverse() const;

  /// sigma_{k+1}(s): flips the sign of sqrt(d_i) exactly for the i with
  /// k(i) = 1.  Error IndexOutOfRange unless 0 <= k < 2^n.
  Element conjugate(unsigned k) const;

  /// Tr(s) = 2^n a(0); equals the exact sum of all conjugates.
  Rat trace() const;

  /// Determinant of the multiplication-by-s matrix; the signed norm, whose
  /// absolute value is Nm(s).
  Rat norm() const;

  /// Column-major multiplication matrix on the radical basis, exact.
  std::vector<Rat> multiplication_matrix() const;

  /// sigma_{k+1}(s) as a high-precision real with certified relative error
  /// at most 2^-(precision_bits-8).  Errors: NotTotallyReal, IndexOutOfRange.
  Real embed_numeric(unsigned k, mpfr_prec_t precision_bits) const;

  /// Enclosure of sigma_{k+1}(s) with outward rounding at the given working
  /// precision (no relative-error guarantee; see embed_numeric for that).
  Interval embed_interval(unsigned k, mpfr_prec_t working_prec) const;

  /// Exact sign of sigma_{k+1}(s), in {-1, 0, +1}; 0 only for s = 0.
  int sign_at(unsigned k) const;

  bool totally_positive() const;

  /// Representative of {s, -s} whose first nonzero coefficient is positive.
  Element canonical_sign() const;

  /// Lexicographic comparison of coefficient vectors in mask order.
  static bool lex_less(const Element& a, const Element& b);

 private:
  void check_same_field(const Element& o) const;

  FieldPtr field_;
  std::vector<Rat> coeffs_;
};

}  // namespace mqlat
