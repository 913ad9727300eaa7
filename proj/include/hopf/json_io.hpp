#pragma once
// JSON encodings of scalars, solution families, reports, presentations and
// structure constants.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopf/catalog.hpp"
#include "hopf/exactfield.hpp"
#include "hopf/partial.hpp"
#include "hopf/polysolve.hpp"
#include "hopf/smash.hpp"

namespace hopf {

using json = nlohmann::json;

inline json to_json(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(to_string(q));
  return {{"order", c.order()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const json& j) {
  try {
    const int m = j.at("order").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(parse_rational(s.get<std::string>()));
    return Cyclotomic(m, coeffs);
  } catch (const json::exception& e) {
    throw ParseError(std::string("cyclotomic JSON: ") + e.what());
  }
}

inline json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

/// Families are written with free unknowns renamed to their parameter names.
inline json to_json(const SolutionFamily& f) {
  const auto names = f.display_names();
  json assignments = json::object();
  for (int v = 0; v < f.ring.nvars(); ++v) assignments[f.ring.name(v)] = f.assignment[v].str(names);
  json cons = json::array();
  for (const auto& c : f.constraints) cons.push_back(c.str(names));
  return {{"assignments", assignments}, {"parameters", f.param_names}, {"constraints", cons}};
}

/// A family read back as text: assignments and constraints over the parameters.
struct FamilyText {
  std::map<std::string, std::string> assignments;
  std::vector<std::string> parameters;
  std::vector<std::string> constraints;
};

inline FamilyText family_from_json(const json& j) {
  FamilyText f;
  try {
    f.assignments = j.at("assignments").get<std::map<std::string, std::string>>();
    f.parameters = j.at("parameters").get<std::vector<std::string>>();
    f.constraints = j.at("constraints").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("family JSON: ") + e.what());
  }
  return f;
}

/// Ideal in the value ring R of a family given as text: parameters are
/// replaced by the unknown they are assigned to.
inline std::vector<Poly> family_text_ideal(const FamilyText& f, const PolyRing& R,
                                           const std::map<std::string, Cyclotomic>& constants = {}) {
  PolyRing P(R.order(), f.parameters);
  std::vector<Poly> images(P.nvars(), Poly(R));
  std::vector<std::optional<Poly>> values(R.nvars());
  for (const auto& [label, text] : f.assignments) {
    int v = R.index_of(label);
    if (v < 0) throw ParseError("unknown unknown '" + label + "'");
    values[v] = parse_poly(P, text, constants);
  }
  for (int p = 0; p < P.nvars(); ++p) {
    bool found = false;
    for (int v = 0; v < R.nvars() && !found; ++v)
      if (values[v] && *values[v] == Poly::var(P, p)) {
        images[p] = Poly::var(R, v);
        found = true;
      }
    if (!found) throw ParseError("parameter " + P.name(p) + " is not the value of any unknown");
  }
  std::vector<Poly> I;
  for (int v = 0; v < R.nvars(); ++v) {
    if (!values[v]) throw ParseError("no assignment for " + R.name(v));
    I.push_back(Poly::var(R, v) - values[v]->substitute(R, images));
  }
  for (const auto& c : f.constraints) I.push_back(parse_poly(P, c, constants).substitute(R, images));
  return I;
}

inline json partial_report_json(const HopfAlgebra& H, const GroupLikeSet& GL, const SubgroupSolutions& sol) {
  json fams = json::array(), sym = json::array();
  for (const auto& f : sol.families) {
    fams.push_back(to_json(f));
    std::string v = symmetric_verdict(H, GL, sol.N, sol.var_basis, f);
    if (v == "true")
      sym.push_back(true);
    else if (v == "false")
      sym.push_back(false);
    else
      sym.push_back(v);
  }
  return {{"algebra", H.name}, {"subgroup", sol.subgroup_labels}, {"families", fams}, {"symmetric", sym}};
}

inline json to_json(const HopfAlgebra& H, const SmashReport& r) {
  json basis = json::array();
  for (const auto& b : r.basis) basis.push_back(H.format(b));
  json j = {{"algebra", r.algebra},
            {"subgroup", r.subgroup},
            {"dim", r.dim},
            {"basis", basis},
            {"carac", r.carac.holds},
            {"strong", r.strong},
            {"coproduct_closure", r.closure},
            {"restriction_lemma", r.restriction},
            {"smash_matches", r.smash_agrees},
            {"skew_corollary_applies", r.corollary.applies}};
  if (!r.carac.holds) {
    j["carac_witness"] = {{"element", H.labels[r.carac.witness]},
                          {"lhs", H.format(r.carac.lhs)},
                          {"rhs", H.format(r.carac.rhs)}};
  }
  if (r.target) {
    j["target"] = *r.target;
    j["target_verified"] = r.target_verified;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Groups and presentations

/// {"abelian": [["g", 4], ["h", 2]]} or {"table": [[...]], "labels": [...], "generators": {"r": 1}}
/// or {"name": "S3"}.
inline FiniteGroup group_from_json(const json& j) {
  try {
    if (j.contains("abelian")) {
      std::vector<std::pair<std::string, int>> f;
      for (const auto& e : j.at("abelian")) f.push_back({e.at(0).get<std::string>(), e.at(1).get<int>()});
      return abelian_group(f);
    }
    if (j.contains("table")) {
      FiniteGroup G(j.at("table").get<std::vector<std::vector<int>>>(), j.at("labels").get<std::vector<std::string>>());
      std::vector<std::pair<std::string, int>> gens;
      if (j.contains("generators"))
        for (const auto& [k, v] : j.at("generators").items()) gens.push_back({k, v.get<int>()});
      G.set_generators(gens);
      return G;
    }
    if (j.contains("name")) return named_group(j.at("name").get<std::string>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("group JSON: ") + e.what());
  }
  throw ParseError("group JSON needs 'abelian', 'table' or 'name'");
}

/// {"name", "group", "field_order", "constants": {"q": "zeta"}, "expected_dim",
///  "generators": [{"name": "x", "delta": ["1", "g"], "chi": {"g": "-1"}, "power": {"n": 2, "rhs": "g^2 - 1"}}],
///  "cross": [{"upper": "y", "lower": "x", "q": "-1", "c": ""}]}
inline PresentationSpec presentation_from_json(const json& j) {
  PresentationSpec S;
  try {
    S.name = j.value("name", std::string("custom"));
    S.group = group_from_json(j.at("group"));
    S.field_order = j.value("field_order", 0);
    S.expected_dim = j.value("expected_dim", 0);
    if (j.contains("constants"))
      for (const auto& [k, v] : j.at("constants").items()) S.constants.push_back({k, v.get<std::string>()});
    for (const auto& g : j.at("generators")) {
      SkewSpec x;
      x.name = g.at("name").get<std::string>();
      x.right = g.at("delta").at(0).get<std::string>();
      x.left = g.at("delta").at(1).get<std::string>();
      if (g.contains("chi")) x.chi = g.at("chi").get<std::map<std::string, std::string>>();
      if (g.contains("power")) {
        x.power = g.at("power").value("n", 2);
        x.rhs = g.at("power").value("rhs", std::string());
      }
      S.skew.push_back(x);
    }
    if (j.contains("cross"))
      for (const auto& c : j.at("cross"))
        S.cross.push_back({c.at("upper").get<std::string>(), c.at("lower").get<std::string>(),
                           c.value("q", std::string("1")), c.value("c", std::string())});
  } catch (const json::exception& e) {
    throw ParseError(std::string("presentation JSON: ") + e.what());
  }
  return S;
}

inline PresentationSpec load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UnknownName("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return presentation_from_json(j);
}

/// Structure constants: mult, comult, counit, antipode over the basis labels.
inline json export_structure(const HopfAlgebra& H) {
  auto sparse = [&](const Sparse& s) {
    json a = json::array();
    for (const auto& e : s) a.push_back({{"index", e.index}, {"coeff", to_json(e.coeff)}});
    return a;
  };
  json mult = json::array();
  for (int i = 0; i < H.dim; ++i) {
    json row = json::array();
    for (int k = 0; k < H.dim; ++k) row.push_back(sparse(H.mult_basis(i, k)));
    mult.push_back(row);
  }
  json comult = json::array();
  for (int i = 0; i < H.dim; ++i) {
    json terms = json::array();
    for (const auto& t : H.comult[i]) terms.push_back({{"left", t.left}, {"right", t.right}, {"coeff", to_json(t.coeff)}});
    comult.push_back(terms);
  }
  json antipode = json::array();
  for (int i = 0; i < H.dim; ++i) antipode.push_back(sparse(H.antipode[i]));
  return {{"name", H.name},     {"dim", H.dim},       {"order", H.order},         {"labels", H.labels},
          {"mult", mult},       {"unit", to_json(H.unit)}, {"comult", comult}, {"counit", to_json(H.counit)},
          {"antipode", antipode}};
}

}  // namespace hopf
