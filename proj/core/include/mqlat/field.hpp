#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "mqlat/numeric.hpp"

namespace mqlat {

/// The field Q(sqrt(d_1), ..., sqrt(d_n)) with its radical basis indexed by
/// subsets of {1..n}.  Basis element for mask S is sqrt(d_S) with
/// d_S = prod_{i in S} d_i (raw subset product, d_empty = 1).  Bitmasks are
/// little-endian over the generator index: bit i-1 <-> d_i.
struct FieldSpec {
  int n = 0;                       // generator count, 1 <= n <= 6
  std::vector<long long> d;        // nonzero squarefree integers, none equal to 1
  int r = 0;                       // degree 2^n
  bool totally_real = false;       // all d_i > 0
  std::vector<Int> subset_product; // d_S for every mask 0..r-1

  bool same_as(const FieldSpec& o) const { return d == o.d; }
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Certifies that the d_i generate a field of degree 2^n: every d_i squarefree
/// and outside {0,1}, and no nonempty subset product is a perfect square.
/// Errors: NotSquarefree (index i, 1-based), DegenerateDegree (subset),
/// Unsupported (n > 6 or empty list).
FieldSpec validate_field(const std::vector<long long>& d);
FieldPtr make_field(const std::vector<long long>& d);

/// Constructs the spec without the degree certificate.  Element arithmetic is
/// well defined in the formal quotient ring for any d list; only the signed
/// sum-of-squares identities use this entry point.
FieldPtr make_formal_field(const std::vector<long long>& d);

int mask_weight(unsigned mask);

/// Masks ordered as the Diophantine unknowns: the empty set, then singletons
/// by generator index, then weight w >= 2 subsets in lexicographic order of
/// their ascending tuples (s_1 < ... < s_w).
std::vector<unsigned> paper_ordered_masks(int n);

/// Mask of the j-th (1-based, lexicographic) ascending w-subset of {1..n}.
unsigned mask_for_combination(int n, int weight, long j);

/// Inverse of mask_for_combination: (weight, 1-based lexicographic index).
std::pair<int, long> combination_index(int n, unsigned mask);

}  // namespace mqlat
