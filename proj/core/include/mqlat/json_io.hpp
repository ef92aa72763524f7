#pragma once

#include <nlohmann/json.hpp>

#include "mqlat/diophantine.hpp"
#include "mqlat/kloosterman.hpp"
#include "mqlat/lattice.hpp"
#include "mqlat/petersson.hpp"

namespace mqlat {

using json = nlohmann::json;

// Exact payloads carry rationals as "p/q" strings and masks as decimal-string
// keys; omitted masks are zero.  Unknown keys are rejected everywhere.

json field_to_json(const FieldSpec& f);
FieldPtr field_from_json(const json& j);

json element_coeffs_to_json(const Element& e);  // bare {"mask": "p/q"} map
json element_to_json(const Element& e);         // {"field": ..., "coeffs": ...}
Element element_from_json(const json& j, FieldPtr field_hint = nullptr);

/// {"principal": coeffs} | {"basis": [coeffs...]} | {"canonical_order": true}
IdealLattice lattice_from_json(const json& j, FieldPtr f);

json shortest_to_json(const ShortestSet& s);
json gram_to_json(const GramMatrix& g);
json sphere_solutions_to_json(const std::vector<SphereSolution>& sols);
json trivial_solutions_to_json(const std::vector<TrivialSolution>& ts, int n);
json dichotomy_to_json(const DichotomyVerdict& v, int n);
json real_to_json(const Real& x);
json cplx_to_json(const Cplx& z);
json geom_report_to_json(const GeomSideReport& rep);
json error_to_json(const Error& e);

/// Subset mask as a 1-based generator index list, e.g. 0b101 -> [1,3].
json mask_to_json(unsigned mask);
unsigned mask_from_json(const json& j, int n);

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed);

}  // namespace mqlat
