#pragma once
// Named algebras (pointed presentations, group algebras and their duals,
// Taft algebras, tensor constructions), table rows and diagram edges.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hopf/error.hpp"
#include "hopf/group_algebras.hpp"
#include "hopf/groups.hpp"
#include "hopf/hopfcore.hpp"
#include "hopf/partial.hpp"
#include "hopf/polysolve.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Presentations written with strings

struct SkewSpec {
  std::string name;
  std::string right = "1";  // a in Delta(x) = x (x) a + b (x) x
  std::string left;         // b
  std::map<std::string, std::string> chi;  // x g = chi(g) g x on group generators; missing means 1
  int power = 2;
  std::string rhs;  // x^power, an element of kG; empty means 0
};

struct CrossSpec {
  std::string upper, lower;  // upper lower = q lower upper + c
  std::string q = "1";
  std::string c;
};

struct PresentationSpec {
  std::string name;
  FiniteGroup group;
  int field_order = 0;  // 0: lcm(exponent, 4)
  std::vector<std::pair<std::string, std::string>> constants;
  std::vector<SkewSpec> skew;
  std::vector<CrossSpec> cross;
  int expected_dim = 0;
};

/// A scalar such as "-1", "q^3", "1/2*zeta" in Q(zeta_m).
inline Cyclotomic parse_scalar(const std::string& text, int m, const std::map<std::string, Cyclotomic>& constants = {}) {
  Poly p = parse_poly(PolyRing(m, {}), text, constants);
  return p.is_zero() ? Cyclotomic::zero(m) : p.constant_term();
}

inline PointedPresentation realize(const PresentationSpec& S) {
  PointedPresentation P;
  const FiniteGroup& G = S.group;
  P.name = S.name;
  P.group = G;
  P.field_order = S.field_order ? S.field_order : std::lcm(G.exponent(), 4);
  P.expected_dim = S.expected_dim;
  const int m = P.field_order;
  for (const auto& [k, v] : S.constants) P.constants[k] = parse_scalar(v, m, P.constants);
  HopfAlgebra kG = group_algebra(G, "kG", m);
  kG.constants = P.constants;
  // kG basis index = group element index
  auto kg_element = [&](const std::string& text) -> Vec { return text.empty() ? Vec{} : parse_element(kG, text); };
  std::map<std::string, int> skew_index;
  for (const auto& x : S.skew) {
    if (skew_index.count(x.name)) throw ParseError(S.name + ": duplicate generator " + x.name);
    skew_index[x.name] = static_cast<int>(P.skew.size());
    SkewGenerator sg;
    sg.name = x.name;
    sg.right_group = G.parse_word(x.right);
    sg.left_group = G.parse_word(x.left);
    std::map<int, Cyclotomic> on_gens;
    for (const auto& [sym, idx] : G.generators()) on_gens[idx] = Cyclotomic::one(m);
    for (const auto& [g, val] : x.chi) {
      int idx = -1;
      for (const auto& [sym, i] : G.generators())
        if (sym == g) idx = i;
      if (idx < 0) throw ParseError(S.name + ": character of " + x.name + " names unknown generator " + g);
      on_gens[idx] = parse_scalar(val, m, P.constants);
    }
    sg.chi = character_from_generators(G, m, on_gens);
    sg.power = x.power;
    sg.power_rhs = kg_element(x.rhs);
    P.skew.push_back(sg);
  }
  for (const auto& c : S.cross) {
    if (!skew_index.count(c.upper) || !skew_index.count(c.lower))
      throw ParseError(S.name + ": cross relation names unknown generator");
    CrossRelation r;
    r.upper = skew_index[c.upper];
    r.lower = skew_index[c.lower];
    r.q = parse_scalar(c.q, m, P.constants);
    r.c = kg_element(c.c);
    P.cross.push_back(r);
  }
  return P;
}

inline HopfAlgebra build_hopf(const PresentationSpec& S) { return build_hopf(realize(S)); }

// ---------------------------------------------------------------------------
// Taft algebras

/// T_n^k(omega): group C_{kn} = <g>, x in P_{1,g^k}, x g = omega g x, x^n = 0.
inline HopfAlgebra taft_algebra(int n, int k, std::optional<Cyclotomic> omega = {}, int field_order = 0,
                                const std::string& name = "") {
  if (n < 2 || k < 1) throw Error("Taft algebra needs n >= 2 and k >= 1");
  const int m = field_order ? field_order : std::lcm(k * n, 4);
  Cyclotomic w = omega ? embed(*omega, m) : Cyclotomic::zeta_power(m, m / (k * n));
  if (multiplicative_order(w) != k * n) throw Error("Taft parameter must be a primitive root of order kn");
  PresentationSpec S;
  S.name = name.empty() ? "Taft(" + std::to_string(n) + "," + std::to_string(k) + ")" : name;
  S.group = cyclic_group(k * n);
  S.field_order = m;
  S.expected_dim = k * n * n;
  PointedPresentation P = realize(S);
  P.constants["omega"] = w;
  SkewGenerator x;
  x.name = "x";
  x.right_group = 0;
  x.left_group = P.group.parse_word("g^" + std::to_string(k));
  x.chi = character_from_generators(P.group, m, {{P.group.parse_word("g"), w}});
  x.power = n;
  P.skew.push_back(x);
  return build_hopf(P);
}

/// Delta(g^i x^j) = sum_l (j choose l)_{omega^k} g^{i+lk} x^{j-l} (x) g^i x^l.
inline Tensor2 taft_closed_form_coproduct(const HopfAlgebra& T, int n, int k, int i, int j) {
  const Cyclotomic w = T.constants.at("omega");
  const Cyclotomic wk = w.pow(k);
  auto label = [&](int gi, int xj) {
    gi %= k * n;
    std::string g = gi == 0 ? "1" : (gi == 1 ? "g" : "g^" + std::to_string(gi));
    std::string x = xj == 0 ? "" : (xj == 1 ? "x" : "x^" + std::to_string(xj));
    return detail::join_label(g, x);
  };
  Tensor2 t;
  for (int l = 0; l <= j; ++l)
    accumulate(t, T.require_index(label(i + l * k, j - l)), T.require_index(label(i, l)), qbinomial(j, l, wk));
  return t;
}

/// lambda(g^i x^j) = delta_{j,0} delta_N(g^i) with N = <g^k>.
inline Vec taft_lambda(const HopfAlgebra& T, int k) {
  GroupLikeSet GL = group_likes(T);
  Subgroup N = closure(GL.group, {GL.group.parse_word("g^" + std::to_string(k))});
  Vec lam = T.zero();
  for (int g : N.members) lam[GL.elements[g]] = Cyclotomic::one(T.order);
  return lam;
}

// ---------------------------------------------------------------------------
// The named algebras

namespace detail {

inline SkewSpec skew(const std::string& name, const std::string& left, std::map<std::string, std::string> chi,
                     const std::string& rhs = "", int power = 2) {
  SkewSpec s;
  s.name = name;
  s.left = left;
  s.chi = std::move(chi);
  s.rhs = rhs;
  s.power = power;
  return s;
}

inline PresentationSpec pres(const std::string& name, FiniteGroup G, int dim, std::vector<SkewSpec> skew,
                             std::vector<CrossSpec> cross = {}, int m = 0) {
  PresentationSpec S;
  S.name = name;
  S.group = std::move(G);
  S.field_order = m ? m : std::lcm(S.group.exponent(), 4);
  S.constants = {{"q", "zeta^" + std::to_string(S.field_order / 4)}};
  S.skew = std::move(skew);
  S.cross = std::move(cross);
  S.expected_dim = dim;
  return S;
}

inline FiniteGroup c2c2() { return abelian_group({{"g", 2}, {"h", 2}}); }
inline FiniteGroup c4c2() { return abelian_group({{"g", 4}, {"h", 2}}); }

inline std::vector<PresentationSpec> pointed_specs() {
  std::vector<PresentationSpec> v;
  const CrossSpec anti{"y", "x", "-1", ""};
  const CrossSpec commute{"y", "x", "1", ""};
  // dimension 4 and 8
  v.push_back(pres("Sweedler", cyclic_group(2), 4, {skew("x", "g", {{"g", "-1"}})}));
  v.push_back(pres("A2", cyclic_group(2), 8, {skew("x", "g", {{"g", "-1"}}), skew("y", "g", {{"g", "-1"}})}, {anti}));
  v.push_back(pres("A4'", cyclic_group(4), 8, {skew("x", "g", {{"g", "-1"}})}));
  v.push_back(pres("A4''", cyclic_group(4), 8, {skew("x", "g", {{"g", "-1"}}, "g^2 - 1")}));
  v.push_back(pres("A4'''", cyclic_group(4), 8, {skew("x", "g^2", {{"g", "q^3"}})}));
  v.push_back(pres("A22", c2c2(), 8, {skew("x", "g", {{"g", "-1"}, {"h", "-1"}})}));
  // dimension 16
  {
    PresentationSpec S = pres("H1", cyclic_group(2), 16,
                              {skew("x", "g", {{"g", "-1"}}), skew("y", "g", {{"g", "-1"}}), skew("z", "g", {{"g", "-1"}})},
                              {{"y", "x", "-1", ""}, {"z", "x", "-1", ""}, {"z", "y", "-1", ""}});
    v.push_back(S);
  }
  v.push_back(pres("H2", cyclic_group(4), 16, {skew("x", "g^2", {{"g", "q"}}), skew("y", "g^2", {{"g", "q"}})}, {anti}));
  v.push_back(pres("H3", cyclic_group(4), 16, {skew("x", "g^2", {{"g", "q"}}), skew("y", "g^2", {{"g", "-q"}})}, {anti}));
  v.push_back(pres("H4", cyclic_group(4), 16, {skew("x", "g", {{"g", "-1"}}), skew("y", "g", {{"g", "-1"}})}, {anti}));
  v.push_back(pres("H5", cyclic_group(4), 16, {skew("x", "g", {{"g", "-1"}}), skew("y", "g", {{"g", "-1"}}, "g^2 - 1")},
                   {anti}));
  v.push_back(pres("H6", cyclic_group(4), 16, {skew("x", "g", {{"g", "-1"}}), skew("y", "g", {{"g", "-1"}}, "g^2 - 1")},
                   {{"y", "x", "-1", "g^2 - 1"}}));
  v.push_back(pres("H7", cyclic_group(4), 16, {skew("x", "g", {{"g", "-1"}}), skew("y", "g^3", {{"g", "-1"}})}, {anti}));
  v.push_back(pres("H8", cyclic_group(4), 16,
                   {skew("x", "g", {{"g", "-1"}}), skew("y", "g^3", {{"g", "-1"}}, "g^2 - 1")}, {anti}));
  v.push_back(pres("H9", cyclic_group(4), 16,
                   {skew("x", "g", {{"g", "-1"}}, "g^2 - 1"), skew("y", "g^3", {{"g", "-1"}}, "g^2 - 1")}, {anti}));
  v.push_back(pres("H10", cyclic_group(4), 16, {skew("x", "g", {{"g", "q"}}, "", 4)}));
  v.push_back(pres("H11", cyclic_group(4), 16, {skew("x", "g", {{"g", "-q"}}, "", 4)}));
  v.push_back(pres("H12", c2c2(), 16,
                   {skew("x", "g", {{"g", "-1"}, {"h", "1"}}), skew("y", "g", {{"g", "-1"}, {"h", "1"}})}, {anti}));
  v.push_back(pres("H13", c2c2(), 16,
                   {skew("x", "g", {{"g", "-1"}, {"h", "1"}}), skew("y", "g", {{"g", "-1"}, {"h", "-1"}})}, {anti}));
  v.push_back(pres("H14", c2c2(), 16,
                   {skew("x", "g", {{"g", "-1"}, {"h", "1"}}), skew("y", "h", {{"g", "1"}, {"h", "-1"}})}, {commute}));
  v.push_back(pres("H15", c2c2(), 16,
                   {skew("x", "g", {{"g", "-1"}, {"h", "-1"}}), skew("y", "h", {{"g", "-1"}, {"h", "-1"}})}, {anti}));
  v.push_back(pres("H16", c2c2(), 16,
                   {skew("x", "g", {{"g", "-1"}, {"h", "-1"}}), skew("y", "h", {{"g", "-1"}, {"h", "-1"}})},
                   {{"y", "x", "-1", "gh - 1"}}));
  v.push_back(pres("H17", abelian_group({{"a", 2}, {"b", 2}, {"g", 2}}), 16, {skew("x", "g", {{"g", "-1"}})}));
  v.push_back(pres("H18", cyclic_group(8), 16, {skew("x", "g", {{"g", "-1"}})}));
  v.push_back(pres("H19", cyclic_group(8), 16, {skew("x", "g^4", {{"g", "zeta"}})}));
  v.push_back(pres("H20", cyclic_group(8), 16, {skew("x", "g^2", {{"g", "q"}})}));
  v.push_back(pres("H21", cyclic_group(8), 16, {skew("x", "g^6", {{"g", "q"}})}));
  v.push_back(pres("H22", cyclic_group(8), 16, {skew("x", "g", {{"g", "-1"}}, "g^2 - 1")}));
  v.push_back(pres("H23", c4c2(), 16, {skew("x", "g", {{"g", "-1"}, {"h", "1"}})}));
  v.push_back(pres("H24", c4c2(), 16, {skew("x", "gh", {{"g", "1"}, {"h", "-1"}})}));
  v.push_back(pres("H25", c4c2(), 16, {skew("x", "g^2", {{"g", "q"}, {"h", "1"}})}));
  v.push_back(pres("H26", c4c2(), 16, {skew("x", "h", {{"g", "1"}, {"h", "-1"}})}));
  v.push_back(pres("H27", c4c2(), 16, {skew("x", "g^2h", {{"g", "q"}, {"h", "1"}})}));
  v.push_back(pres("H28", c4c2(), 16, {skew("x", "g", {{"g", "-1"}, {"h", "1"}}, "g^2 - 1")}));
  v.push_back(pres("H29", c4c2(), 16, {skew("x", "gh", {{"g", "1"}, {"h", "-1"}}, "g^2 - 1")}));
  return v;
}

struct NamedGroup {
  std::string name;
  std::function<FiniteGroup()> make;
};

inline const std::vector<NamedGroup>& small_groups() {
  static const std::vector<NamedGroup> groups = {
      {"C2", [] { return cyclic_group(2); }},
      {"C3", [] { return cyclic_group(3); }},
      {"C4", [] { return cyclic_group(4); }},
      {"C2xC2", [] { return abelian_group({{"g", 2}, {"h", 2}}); }},
      {"C5", [] { return cyclic_group(5); }},
      {"C6", [] { return cyclic_group(6); }},
      {"S3", [] { return symmetric_group_3(); }},
      {"C7", [] { return cyclic_group(7); }},
      {"C8", [] { return cyclic_group(8); }},
      {"C4xC2", [] { return abelian_group({{"g", 4}, {"h", 2}}); }},
      {"C2xC2xC2", [] { return abelian_group({{"a", 2}, {"b", 2}, {"g", 2}}); }},
      {"D4", [] { return dihedral_group(4); }},
      {"Q8", [] { return quaternion_group(); }},
  };
  return groups;
}

}  // namespace detail

inline FiniteGroup named_group(const std::string& name) {
  for (const auto& g : detail::small_groups())
    if (g.name == name) return g.make();
  std::smatch mt;
  static const std::regex cyc(R"(C(\d+))");
  if (std::regex_match(name, mt, cyc)) return cyclic_group(std::stoi(mt[1]));
  throw UnknownName("no group named '" + name + "'");
}

struct CatalogEntry {
  std::string name;
  std::string kind;  // pointed, group, dual, taft, tensor
  int expected_dim = 0;
  int expected_group_likes = 0;  // 0 for duals, which have no group-like basis elements
  std::function<HopfAlgebra()> build;
};

/// Tensor constructions identified with pointed algebras: generator images
/// of the pointed algebra inside the tensor product.
struct TensorIdentification {
  std::string tensor;
  std::string algebra;
  std::map<std::string, std::string> images;
};

inline const std::vector<TensorIdentification>& tensor_identifications() {
  static const std::vector<TensorIdentification> ids = {
      {"A2(x)kC2", "H12", {{"g", "g"}, {"h", "h"}, {"x", "x"}, {"y", "y"}}},
      {"Sweedler(x)Sweedler", "H14", {{"g", "g"}, {"h", "g'"}, {"x", "x"}, {"y", "x'"}}},
      {"Sweedler(x)kC2xC2", "H17", {{"a", "a"}, {"b", "b"}, {"g", "g"}, {"x", "x"}}},
  };
  return ids;
}

inline const std::vector<std::pair<int, int>>& taft_parameters() {
  static const std::vector<std::pair<int, int>> p = {{2, 1}, {2, 2}, {2, 4}, {3, 2}, {4, 2}};
  return p;
}

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& S : detail::pointed_specs())
      out.push_back({S.name, "pointed", S.expected_dim, S.group.order(), [S] { return build_hopf(S); }});
    for (const auto& g : detail::small_groups()) {
      FiniteGroup G = g.make();
      const std::string kg = "k" + g.name, dual = "(k" + g.name + ")^*";
      out.push_back({kg, "group", G.order(), G.order(), [G, kg] { return group_algebra(G, kg); }});
      out.push_back({dual, "dual", G.order(), 0, [G, dual] { return dual_group_algebra(G, dual); }});
    }
    for (auto [n, k] : taft_parameters()) {
      std::string name = "Taft(" + std::to_string(n) + "," + std::to_string(k) + ")";
      out.push_back({name, "taft", k * n * n, k * n, [n, k] { return taft_algebra(n, k); }});
    }
    auto find_spec = [](const std::string& name) {
      for (const auto& S : detail::pointed_specs())
        if (S.name == name) return S;
      throw UnknownName(name);
    };
    auto A2 = find_spec("A2"), Sw = find_spec("Sweedler");
    out.push_back({"A2(x)kC2", "tensor", 16, 4, [A2] {
                     return tensor_hopf(build_hopf(A2), group_algebra(cyclic_group(2, "h"), "kC2"), "A2(x)kC2");
                   }});
    out.push_back({"Sweedler(x)Sweedler", "tensor", 16, 4, [Sw] {
                     HopfAlgebra H = build_hopf(Sw);
                     return tensor_hopf(H, H, "Sweedler(x)Sweedler");
                   }});
    out.push_back({"Sweedler(x)kC2xC2", "tensor", 16, 8, [Sw] {
                     return tensor_hopf(build_hopf(Sw), group_algebra(abelian_group({{"a", 2}, {"b", 2}}), "kC2xC2"),
                                        "Sweedler(x)kC2xC2");
                   }});
    return out;
  }();
  return entries;
}

inline std::vector<std::string> algebra_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.name);
  return out;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw UnknownName("no algebra named '" + name + "'");
}

/// Built (and axiom-checked) algebra by name; "Taft(n,k)" accepts any n >= 2, k >= 1.
inline HopfAlgebra get_algebra(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, HopfAlgebra> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
  }
  HopfAlgebra H;
  std::smatch mt;
  static const std::regex taft(R"(Taft\((\d+),(\d+)\))");
  bool known = false;
  for (const auto& e : catalog())
    if (e.name == name) known = true;
  if (known) {
    H = catalog_entry(name).build();
  } else if (std::regex_match(name, mt, taft)) {
    H = taft_algebra(std::stoi(mt[1]), std::stoi(mt[2]));
  } else {
    throw UnknownName("no algebra named '" + name + "'");
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(name, H);
  return H;
}

inline PresentationSpec presentation_spec(const std::string& name) {
  for (const auto& S : detail::pointed_specs())
    if (S.name == name) return S;
  throw UnknownName("no pointed presentation named '" + name + "'");
}

// ---------------------------------------------------------------------------
// Table data

inline std::string data_dir() {
  if (const char* env = std::getenv("HOPF_PARTIAL_DATA"); env && *env) return env;
#ifdef HOPF_PARTIAL_DATA_DIR
  return HOPF_PARTIAL_DATA_DIR;
#else
  return "data";
#endif
}

struct TableRow {
  std::string algebra;
  std::vector<std::string> subgroup;  // group-like labels; {"G"} for the whole group
  std::vector<std::string> values;    // one per table column
  std::vector<std::string> parameters;
  std::vector<std::string> constraints;
  std::map<std::string, std::string> sample;  // documented parameter point
  std::string erratum;  // set when the published row needed an extra constraint
};

struct Table {
  std::string algebra;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
  std::string note;
};

inline Table table_from_json(const nlohmann::json& j) {
  Table t;
  try {
    t.algebra = j.at("algebra").get<std::string>();
    t.columns = j.at("columns").get<std::vector<std::string>>();
    if (j.contains("note")) t.note = j.at("note").get<std::string>();
    for (const auto& r : j.at("rows")) {
      TableRow row;
      row.algebra = t.algebra;
      row.subgroup = r.at("subgroup").get<std::vector<std::string>>();
      row.values = r.at("values").get<std::vector<std::string>>();
      if (r.contains("parameters")) row.parameters = r.at("parameters").get<std::vector<std::string>>();
      if (r.contains("constraints")) row.constraints = r.at("constraints").get<std::vector<std::string>>();
      if (r.contains("sample")) row.sample = r.at("sample").get<std::map<std::string, std::string>>();
      if (r.contains("erratum")) row.erratum = r.at("erratum").get<std::string>();
      if (row.values.size() != t.columns.size())
        throw ParseError(t.algebra + ": row has " + std::to_string(row.values.size()) + " values for " +
                         std::to_string(t.columns.size()) + " columns");
      t.rows.push_back(row);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table data: ") + e.what());
  }
  return t;
}

inline std::string table_file_name(const std::string& algebra) {
  std::string f;
  for (char c : algebra) f += c == '\'' ? 'p' : c;
  return f + ".json";
}

inline Table load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UnknownName("cannot open table file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return table_from_json(j);
}

inline Table load_table(const std::string& algebra, const std::string& dir = data_dir()) {
  return load_table_file(dir + "/tables/" + table_file_name(algebra));
}

inline std::vector<TableRow> table_rows(const std::string& algebra) { return load_table(algebra).rows; }

inline std::vector<std::string> tabulated_algebras() {
  std::vector<std::string> out = {"Sweedler", "A2", "A4'", "A4''", "A4'''", "A22"};
  for (int i = 1; i <= 29; ++i) out.push_back("H" + std::to_string(i));
  return out;
}

inline Subgroup row_subgroup(const GroupLikeSet& GL, const TableRow& row) {
  const FiniteGroup& G = GL.group;
  if (row.subgroup.size() == 1 && row.subgroup[0] == "G") {
    std::vector<int> all;
    for (int g = 0; g < G.order(); ++g) all.push_back(g);
    return Subgroup{all};
  }
  std::vector<int> members;
  for (const auto& w : row.subgroup) members.push_back(G.parse_word(w));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_subgroup(G, members)) throw ParseError(row.algebra + ": row subgroup is not a subgroup");
  return Subgroup{members};
}

/// A table row with its parameters as ring variables.
struct ParsedRow {
  Subgroup N;
  PolyRing params;
  std::vector<Poly> lambda;  // on every basis element
  std::vector<Poly> constraints;
};

inline ParsedRow parse_row(const HopfAlgebra& H, const GroupLikeSet& GL, const Table& t, const TableRow& row) {
  ParsedRow P;
  P.N = row_subgroup(GL, row);
  P.params = PolyRing(H.order, row.parameters);
  std::map<std::string, Cyclotomic> consts;
  if (H.constants.count("q")) consts["q"] = H.constants.at("q");
  std::vector<std::optional<Poly>> lam(H.dim);
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    int b = H.require_index(t.columns[c]);
    lam[b] = parse_poly(P.params, row.values[c], consts);
  }
  for (int b = 0; b < H.dim; ++b) {
    int g = GL.group_index(b);
    Poly expect = Poly::constant(P.params, g >= 0 && P.N.contains(g) ? 1 : 0);
    if (g >= 0) {
      if (lam[b] && *lam[b] != expect)
        throw ParseError(t.algebra + ": group-like column " + H.labels[b] + " disagrees with the row subgroup");
      lam[b] = expect;
    } else if (!lam[b]) {
      throw ParseError(t.algebra + ": no column for basis element " + H.labels[b]);
    }
    P.lambda.push_back(*lam[b]);
  }
  for (const auto& c : row.constraints) P.constraints.push_back(parse_poly(P.params, c, consts));
  return P;
}

/// The row as an ideal in the value ring: each parameter is read off the
/// first column holding exactly that parameter.
inline std::vector<Poly> row_ideal(const ParsedRow& P, const PolyRing& R, const std::vector<int>& var_basis) {
  std::vector<Poly> images(P.params.nvars(), Poly(R));
  for (int p = 0; p < P.params.nvars(); ++p) {
    Poly target = Poly::var(P.params, p);
    bool found = false;
    for (std::size_t v = 0; v < var_basis.size() && !found; ++v)
      if (P.lambda[var_basis[v]] == target) {
        images[p] = Poly::var(R, static_cast<int>(v));
        found = true;
      }
    if (!found) throw ParseError("parameter " + P.params.name(p) + " is not the value of any column");
  }
  std::vector<Poly> I;
  for (std::size_t v = 0; v < var_basis.size(); ++v)
    I.push_back(Poly::var(R, static_cast<int>(v)) - P.lambda[var_basis[v]].substitute(R, images));
  for (const auto& c : P.constraints) I.push_back(c.substitute(R, images));
  return I;
}

/// Every defect polynomial of the row lies in the ideal of its constraints.
inline bool row_is_partial_action(const HopfAlgebra& H, const ParsedRow& P) {
  auto gb = groebner(P.constraints);
  for (const auto& d : partial_defects(H, P.lambda))
    if (!ideal_contains(gb, d)) return false;
  return true;
}

/// The row at a parameter point: `overrides`, then listed sample values,
/// then 1, 2, 3, ...
inline Vec row_sample(const HopfAlgebra& H, const ParsedRow& P, const TableRow& row,
                      const std::map<std::string, std::string>& overrides = {}) {
  std::map<std::string, Cyclotomic> consts;
  if (H.constants.count("q")) consts["q"] = H.constants.at("q");
  std::vector<Cyclotomic> point;
  for (int p = 0; p < P.params.nvars(); ++p) {
    const std::string& name = P.params.name(p);
    auto o = overrides.find(name);
    auto it = row.sample.find(name);
    if (o != overrides.end())
      point.push_back(parse_scalar(o->second, H.order, consts));
    else if (it != row.sample.end())
      point.push_back(parse_scalar(it->second, H.order, consts));
    else
      point.push_back(Cyclotomic(H.order, Rational(p + 1)));
  }
  for (const auto& c : P.constraints)
    if (!c.evaluate(point).is_zero())
      throw ParseError(row.algebra + ": sample point violates constraint " + c.str());
  Vec lam;
  for (const auto& l : P.lambda) lam.push_back(l.evaluate(point));
  return lam;
}

struct SubgroupCheck {
  Subgroup N;
  std::string subgroup;
  int solver_families = 0;
  int table_rows = 0;
  bool ok = false;
  std::string detail;
};

struct TableCheck {
  std::string algebra;
  bool ok = true;
  std::vector<SubgroupCheck> subgroups;
  std::vector<std::string> errors;
  std::vector<std::string> errata;
};

/// Solver families against table rows, subgroup by subgroup, by equality of
/// the union of their varieties; every row is also checked symbolically.
inline TableCheck verify_table(const HopfAlgebra& H, const Table& t, const ExtractOptions& opt = {}) {
  TableCheck out;
  out.algebra = t.algebra;
  GroupLikeSet GL = group_likes(H);
  auto [R, var_basis] = value_ring(H, GL);
  std::map<Subgroup, std::vector<std::vector<Poly>>> rows_by_N;
  for (const auto& row : t.rows) {
    ParsedRow P = parse_row(H, GL, t, row);
    if (!row_is_partial_action(H, P)) {
      out.ok = false;
      out.errors.push_back("row " + P.N.str(GL.group) + " is not a partial action");
    }
    rows_by_N[P.N].push_back(row_ideal(P, R, var_basis));
    if (!row.erratum.empty()) out.errata.push_back(P.N.str(GL.group) + ": " + row.erratum);
  }
  for (const auto& N : enumerate_subgroups(GL.group)) {
    SubgroupCheck sc;
    sc.N = N;
    sc.subgroup = N.str(GL.group);
    SubgroupSolutions sol = solve_partial_actions(H, GL, N, opt);
    std::vector<std::vector<Poly>> found;
    for (const auto& f : sol.families) found.push_back(f.ideal);
    const auto& expected = rows_by_N[N];
    sc.solver_families = static_cast<int>(found.size());
    sc.table_rows = static_cast<int>(expected.size());
    if (found.empty() || expected.empty()) {
      sc.ok = found.empty() && expected.empty();
      if (!sc.ok) sc.detail = found.empty() ? "table has a row, solver finds none" : "solver finds a family, table has no row";
    } else {
      sc.ok = same_variety(found, expected);
      if (!sc.ok) sc.detail = "solution varieties differ";
    }
    if (!sc.ok) out.ok = false;
    out.subgroups.push_back(sc);
  }
  for (const auto& [N, rows] : rows_by_N) {
    bool seen = false;
    for (const auto& sc : out.subgroups) seen = seen || sc.N == N;
    if (!seen) {
      out.ok = false;
      out.errors.push_back("row for unknown subgroup");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Diagram edges

struct DiagramEdge {
  std::string source;
  std::vector<std::string> subgroup;  // group-like labels of the source
  std::string target;
  std::map<std::string, std::string> images;  // target generator -> element of the source
};

inline std::vector<DiagramEdge> load_diagram(const std::string& dir = data_dir()) {
  std::string path = dir + "/diagram.json";
  std::ifstream in(path);
  if (!in) throw UnknownName("cannot open " + path);
  std::vector<DiagramEdge> out;
  try {
    nlohmann::json j;
    in >> j;
    for (const auto& e : j.at("edges")) {
      DiagramEdge d;
      d.source = e.at("source").get<std::string>();
      d.subgroup = e.at("subgroup").get<std::vector<std::string>>();
      d.target = e.at("target").get<std::string>();
      d.images = e.at("images").get<std::map<std::string, std::string>>();
      out.push_back(d);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return out;
}

inline std::vector<DiagramEdge> diagram_edges() { return load_diagram(); }

}  // namespace hopf
