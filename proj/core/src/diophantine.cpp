#include "mqlat/diophantine.hpp"

#include "mqlat/errors.hpp"

namespace mqlat {

std::vector<SphereSolution> sphere_solutions(const IdealLattice& lat,
                                             const Rat& rhs_sq) {
  if (rhs_sq <= 0)
    throw Error("NonPositiveRadius", "sphere radius squared must be positive");
  std::vector<Element> pts = lattice_points_with_norm_sq(lat, rhs_sq);
  std::vector<unsigned> order = paper_ordered_masks(lat.spec().n);
  std::vector<SphereSolution> out;
  out.reserve(pts.size());
  for (auto& e : pts) {
    SphereSolution s{{}, e};
    s.coords.reserve(order.size());
    for (unsigned m : order) s.coords.push_back(e.coeff(m));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<TrivialSolution> trivial_solutions(const IdealLattice& lat) {
  const FieldSpec& f = lat.spec();
  Rat min_sq = shortest_vectors(lat).min_sq;
  std::vector<TrivialSolution> out;
  for (unsigned m = 0; m < static_cast<unsigned>(f.r); ++m) {
    // need min_sq = 2^n x^2 d_S with x rational and x sqrt(d_S) in the lattice
    Rat q = min_sq / (Rat(f.r) * Rat(f.subset_product[m]));
    Rat x;
    if (!rat_is_square(q, &x)) continue;
    Element candidate = Element::radical(lat.field(), m, x);
    if (member(lat, candidate)) out.push_back(TrivialSolution{m, x});
  }
  return out;
}

DichotomyVerdict dichotomy(const IdealLattice& lat) {
  std::vector<TrivialSolution> ts = trivial_solutions(lat);
  DichotomyVerdict v{false, Element::zero(lat.field()), 0, Rat(0), false};
  if (ts.empty()) return v;
  v.collapsed = true;
  v.subset_mask = ts[0].subset_mask;
  v.x = ts[0].x;
  v.element = Element::radical(lat.field(), v.subset_mask, v.x);
  // distinct subsets would contradict the uniqueness argument; flag if seen
  for (size_t i = 1; i < ts.size(); ++i)
    if (ts[i].subset_mask != v.subset_mask) v.multiple_witnesses = true;
  return v;
}

}  // namespace mqlat
