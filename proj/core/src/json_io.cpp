#include "mqlat/json_io.hpp"

#include <algorithm>
#include <string>

#include "mqlat/errors.hpp"

namespace mqlat {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = std::any_of(allowed.begin(), allowed.end(),
                          [&](const char* k) { return it.key() == k; });
    if (!ok) throw Error("ParseError", "unknown key: " + it.key());
  }
}

json field_to_json(const FieldSpec& f) {
  return json{{"d", f.d}};
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object()) throw Error("ParseError", "field must be an object");
  reject_unknown_keys(j, {"d"});
  if (!j.contains("d") || !j["d"].is_array())
    throw Error("ParseError", "field needs a \"d\" array");
  std::vector<long long> d;
  for (const auto& v : j["d"]) {
    if (!v.is_number_integer())
      throw Error("ParseError", "field generators must be integers");
    d.push_back(v.get<long long>());
  }
  return make_field(d);
}

json element_coeffs_to_json(const Element& e) {
  json out = json::object();
  for (unsigned m = 0; m < static_cast<unsigned>(e.spec().r); ++m)
    if (e.coeff(m) != 0) out[std::to_string(m)] = rat_to_string(e.coeff(m));
  return out;
}

json element_to_json(const Element& e) {
  return json{{"field", field_to_json(e.spec())},
              {"coeffs", element_coeffs_to_json(e)}};
}

namespace {

Element coeffs_from_json(const json& j, const FieldPtr& f) {
  if (!j.is_object()) throw Error("ParseError", "coeffs must be a mask->rational map");
  std::vector<Rat> coeffs(static_cast<size_t>(f->r), Rat(0));
  for (auto it = j.begin(); it != j.end(); ++it) {
    size_t pos = 0;
    unsigned long mask = 0;
    try {
      mask = std::stoul(it.key(), &pos);
    } catch (...) {
      throw Error("ParseError", "bad mask key: " + it.key());
    }
    if (pos != it.key().size() || mask >= static_cast<unsigned long>(f->r))
      throw Error("ParseError", "mask key out of range: " + it.key());
    if (!it.value().is_string())
      throw Error("ParseError", "coefficients must be rational strings");
    coeffs[mask] = rat_from_string(it.value().get<std::string>());
  }
  return Element(f, std::move(coeffs));
}

}  // namespace

Element element_from_json(const json& j, FieldPtr field_hint) {
  if (j.is_object() && j.contains("coeffs")) {
    reject_unknown_keys(j, {"field", "coeffs"});
    FieldPtr f = field_hint;
    if (j.contains("field")) {
      FieldPtr parsed = field_from_json(j["field"]);
      if (f && !f->same_as(*parsed))
        throw Error("FieldMismatch", "payload field disagrees with context");
      f = parsed;
    }
    if (!f) throw Error("ParseError", "element payload needs a field");
    return coeffs_from_json(j["coeffs"], f);
  }
  if (!field_hint) throw Error("ParseError", "bare coefficient map needs a field");
  return coeffs_from_json(j, field_hint);
}

IdealLattice lattice_from_json(const json& j, FieldPtr f) {
  if (!j.is_object()) throw Error("ParseError", "lattice must be an object");
  reject_unknown_keys(j, {"principal", "basis", "canonical_order"});
  int given = (j.contains("principal") ? 1 : 0) + (j.contains("basis") ? 1 : 0) +
              (j.contains("canonical_order") ? 1 : 0);
  if (given != 1)
    throw Error("ParseError",
                "lattice needs exactly one of principal | basis | canonical_order");
  if (j.contains("principal"))
    return principal_lattice(f, element_from_json(j["principal"], f));
  if (j.contains("canonical_order")) return canonical_order(f);
  std::vector<Element> basis;
  for (const auto& b : j["basis"]) basis.push_back(element_from_json(b, f));
  return from_basis(f, std::move(basis));
}

json shortest_to_json(const ShortestSet& s) {
  json vecs = json::array();
  for (const auto& v : s.vectors) vecs.push_back(element_coeffs_to_json(v));
  return json{{"min_sq", rat_to_string(s.min_sq)}, {"vectors", vecs}};
}

json gram_to_json(const GramMatrix& g) {
  json rows = json::array();
  for (int i = 0; i < g.r; ++i) {
    json row = json::array();
    for (int j = 0; j < g.r; ++j) row.push_back(rat_to_string(g.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json mask_to_json(unsigned mask) {
  json out = json::array();
  for (int i = 0; mask >> i; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

unsigned mask_from_json(const json& j, int n) {
  if (!j.is_array()) throw Error("ParseError", "subset must be an index array");
  unsigned mask = 0;
  for (const auto& v : j) {
    long i = v.get<long>();
    if (i < 1 || i > n) throw Error("ParseError", "subset index out of range");
    mask |= 1u << (i - 1);
  }
  return mask;
}

json sphere_solutions_to_json(const std::vector<SphereSolution>& sols) {
  json out = json::array();
  for (const auto& s : sols) {
    json coords = json::array();
    for (const auto& c : s.coords) coords.push_back(rat_to_string(c));
    out.push_back(json{{"coords", coords},
                       {"element", element_coeffs_to_json(s.element)}});
  }
  return out;
}

json trivial_solutions_to_json(const std::vector<TrivialSolution>& ts, int) {
  json out = json::array();
  for (const auto& t : ts)
    out.push_back(json{{"subset", mask_to_json(t.subset_mask)},
                       {"x", rat_to_string(t.x)}});
  return out;
}

json dichotomy_to_json(const DichotomyVerdict& v, int) {
  if (!v.collapsed) return json{{"verdict", "empty"}};
  json out{{"verdict", "collapsed"},
           {"subset", mask_to_json(v.subset_mask)},
           {"x", rat_to_string(v.x)},
           {"element", element_coeffs_to_json(v.element)}};
  if (v.multiple_witnesses) out["finding"] = "multiple trivial-solution subsets";
  return out;
}

json real_to_json(const Real& x) {
  return json{{"value", x.str()},
              {"precision_bits", static_cast<long>(x.prec())}};
}

json cplx_to_json(const Cplx& z) {
  return json{{"re", z.re.str()}, {"im", z.im.str()}};
}

json geom_report_to_json(const GeomSideReport& rep) {
  json classes = json::array();
  for (const auto& c : rep.classes) {
    json uterms = json::array();
    for (const auto& u : c.u_terms) {
      json args = json::array(), vals = json::array();
      for (const auto& a : u.bessel_args) args.push_back(a.str());
      for (const auto& v : u.bessel_values) vals.push_back(v.str());
      uterms.push_back(json{{"eta_u", element_coeffs_to_json(u.eta_u)},
                            {"kloosterman", cplx_to_json(u.kloosterman_value)},
                            {"bessel_args", args},
                            {"bessel_values", vals},
                            {"term", cplx_to_json(u.term)}});
    }
    json cj{{"verdict", c.collapsed ? "collapsed" : "empty"},
            {"min_sq", rat_to_string(c.min_sq)},
            {"window_ok", c.window_ok},
            {"u_terms", uterms}};
    if (c.collapsed) {
      cj["s_prime"] = element_coeffs_to_json(c.s_prime);
      cj["s_prime_printed"] = c.s_prime_printed.str();
    }
    if (c.multiple_witnesses) cj["finding"] = "multiple trivial-solution subsets";
    classes.push_back(cj);
  }
  json out{{"hat_t", rep.hat_t},
           {"main_term", cplx_to_json(rep.main_term)},
           {"a_term", cplx_to_json(rep.a_term)},
           {"a_term_exact_zero", rep.a_term_exact_zero},
           {"remainder_scale", rep.remainder_scale.str()},
           {"windows_ok", rep.windows_ok},
           {"order_disc", rat_to_string(rep.order_disc)},
           {"n_norm", rat_to_string(rep.n_norm)},
           {"classes", classes}};
  if (rep.psi_level) out["psi_level"] = rat_to_string(*rep.psi_level);
  return out;
}

json error_to_json(const Error& e) {
  json detail = json::object();
  for (const auto& [k, v] : e.detail()) detail[k] = v;
  json inner{{"type", e.kind()}, {"message", e.what()}};
  if (!detail.empty()) inner["detail"] = detail;
  return json{{"error", inner}};
}

}  // namespace mqlat
