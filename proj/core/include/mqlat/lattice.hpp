#pragma once

#include <optional>
#include <vector>

#include "mqlat/element.hpp"
#include "mqlat/embedding.hpp"

namespace mqlat {

enum class Provenance { principal, canonical_order, user_supplied };

/// A full-rank Z-lattice in a totally real field, given by 2^n basis elements.
/// Models fractional ideals as explicit lattices; ideal arithmetic in the
/// maximal order is out of scope, callers supply bases.  Internally the basis
/// is scaled by the common denominator l so the working coefficient matrix and
/// its Gram are integral; all enumeration happens on that integer form.
class IdealLattice {
 public:
  const FieldPtr& field() const { return field_; }
  const FieldSpec& spec() const { return *field_; }
  const std::vector<Element>& basis() const { return basis_; }
  Provenance provenance() const { return prov_; }
  const std::optional<Element>& generator() const { return gen_; }

  /// The rational 1/l pulled out: basis = scale * (integer working basis).
  Rat scale() const { return Rat(Int(1), scale_den_); }
  const Int& scale_den() const { return scale_den_; }
  /// Row-major r x r integer coefficient matrix (rows = l * basis coeffs).
  const std::vector<Int>& working_coeffs() const { return w_; }
  /// Integer Gram of the working basis: 2^n W diag(d_S) W^T.
  const std::vector<Int>& working_gram() const { return gram_; }

  friend IdealLattice principal_lattice(FieldPtr f, const Element& gen);
  friend IdealLattice from_basis(FieldPtr f, std::vector<Element> elems);
  friend IdealLattice canonical_order(FieldPtr f);
  friend IdealLattice lll_reduce(const IdealLattice& lat);

 private:
  IdealLattice(FieldPtr f, std::vector<Element> basis, Provenance prov,
               std::optional<Element> gen);

  FieldPtr field_;
  std::vector<Element> basis_;
  Provenance prov_;
  std::optional<Element> gen_;
  Int scale_den_;
  std::vector<Int> w_;
  std::vector<Int> gram_;
};

/// Lattice generated by gen * sqrt(d_S) over all masks S, i.e. gen * Z[sqrt(d_S)].
/// Errors: ZeroGenerator, NotTotallyReal.
IdealLattice principal_lattice(FieldPtr f, const Element& gen);

/// Errors: RankDeficient, NotTotallyReal, WrongBasisSize.
IdealLattice from_basis(FieldPtr f, std::vector<Element> elems);

/// The canonical order Z[sqrt(d_S)] itself.
IdealLattice canonical_order(FieldPtr f);

/// True iff x is an integer combination of the basis (exact solve).
bool member(const IdealLattice& lat, const Element& x);

/// Same lattice with a delta = 99/100 LLL-reduced basis.  Reduction runs in
/// exact rational arithmetic on the integer Gram; the result is re-validated.
IdealLattice lll_reduce(const IdealLattice& lat);

/// Exact size-reduction + Lovasz predicate at delta = 99/100.
bool is_lll_reduced(const IdealLattice& lat);

/// Exact min(M)^2 and the complete set of shortest nonzero points mod +-,
/// one representative per pair (first nonzero coefficient positive),
/// lexicographically ordered.
struct ShortestSet {
  Rat min_sq;
  std::vector<Element> vectors;

  /// Both signs, the paper's full B_M.
  std::vector<Element> expanded() const;
};

/// Fincke-Pohst on the LLL-reduced integer Gram with exact interval bounds;
/// deterministic output independent of the worker count.  workers = 0 reads
/// MQLAT_THREADS (default 1).
ShortestSet shortest_vectors(const IdealLattice& lat, int workers = 0);

/// Exhaustive scan of coefficient vectors with max-norm <= box_radius.
/// Error BoxTooSmall unless the box certifiably contains a shortest vector
/// (derived from min_sq <= min diagonal Gram entry).
ShortestSet brute_force_shortest(const IdealLattice& lat, long box_radius);

/// Smallest box radius the certificate accepts for this lattice.
long certified_box_radius(const IdealLattice& lat);

/// All lattice points with norm_sq_form == value exactly (mod +-, canonical
/// representatives, sorted).  Empty when value is not attained.
std::vector<Element> lattice_points_with_norm_sq(const IdealLattice& lat,
                                                 const Rat& value,
                                                 int workers = 0);

/// All nonzero points with norm_sq_form <= bound (mod +-, sorted).
std::vector<Element> lattice_points_with_norm_sq_upto(const IdealLattice& lat,
                                                      const Rat& bound,
                                                      int workers = 0);

}  // namespace mqlat
