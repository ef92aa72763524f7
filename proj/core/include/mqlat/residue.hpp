#pragma once

#include <optional>
#include <vector>

#include "mqlat/element.hpp"

namespace mqlat {

/// Coset representatives of O/sO for the canonical order O = Z[sqrt(d_S)],
/// built from the Smith normal form of the multiplication-by-s matrix.
/// Units carry their residue inverses (x xbar = 1 mod sO).
class ResidueSystem {
 public:
  const Element& modulus() const { return s_; }
  const Int& quotient_size() const { return size_; }
  const std::vector<Element>& residues() const { return residues_; }
  const std::vector<Element>& units() const { return units_; }
  /// Inverse of the i-th unit representative.
  const Element& unit_inverse(size_t i) const { return unit_inverses_[i]; }

  /// Canonical representative of the coset of x (integral coefficients).
  Element canonical_rep(const Element& x) const;

  friend ResidueSystem residue_units(FieldPtr f, const Element& s);

 private:
  ResidueSystem(FieldPtr f, Element s) : field_(std::move(f)), s_(std::move(s)) {}

  FieldPtr field_;
  Element s_;
  Int size_;
  std::vector<Int> u_, u_inv_;  // row transform and its inverse, row-major
  std::vector<Int> diag_;       // diagonal of the Smith form, positive
  std::vector<Element> residues_;
  std::vector<Element> units_;
  std::vector<Element> unit_inverses_;
};

/// Errors: ZeroDivisor (s = 0), NotIntegral (s outside the canonical order),
/// QuotientTooLarge (|Nm(s)| > 10^5).
ResidueSystem residue_units(FieldPtr f, const Element& s);

/// Integer column-style HNF solve: find integer u with A u = b, where A is
/// r x c row-major and its columns generate the lattice.  Empty optional when
/// b is outside the column lattice.
std::optional<std::vector<Int>> solve_integer_column_system(
    const std::vector<Int>& a, int rows, int cols, const std::vector<Int>& b);

}  // namespace mqlat
