#pragma once

#include <vector>

#include "mqlat/lattice.hpp"

namespace mqlat {

/// A rational solution of 2^n (X_0^2 + sum d_i X_i^2 + sum Y^2 prod d) = rhs^2
/// whose element lies in the lattice.  Coordinates are listed in the unknown
/// order X_0, X_1..X_n, Y_{2,1}, ..., Y_{n,1} (weight then lexicographic).
struct SphereSolution {
  std::vector<Rat> coords;
  Element element;
};

/// All lattice points with norm_sq_form == rhs_sq, one per +- pair; the
/// membership filter of the correspondence theorem is built in because the
/// search runs through the lattice.  Error NonPositiveRadius for rhs_sq <= 0.
std::vector<SphereSolution> sphere_solutions(const IdealLattice& lat,
                                             const Rat& rhs_sq);

/// A solution of the sphere equation at min_sq with at most one nonzero
/// unknown: min_sq / (2^n d_S) = x^2 with x * sqrt(d_S) in the lattice.
struct TrivialSolution {
  unsigned subset_mask;
  Rat x;  // reported positive
};

std::vector<TrivialSolution> trivial_solutions(const IdealLattice& lat);

/// Theorem dichotomy: a trivial solution collapses the small-embedding set to
/// the single point x * sqrt(d_S); otherwise that set is empty.
struct DichotomyVerdict {
  bool collapsed = false;
  Element element;       // meaningful iff collapsed
  unsigned subset_mask = 0;
  Rat x;
  /// Set when two distinct trivial-solution subsets were found, which the
  /// uniqueness argument rules out for valid fields; surfaced as a finding.
  bool multiple_witnesses = false;
};

DichotomyVerdict dichotomy(const IdealLattice& lat);

}  // namespace mqlat
