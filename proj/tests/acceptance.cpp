// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hopf/catalog.hpp"
#include "hopf/group_algebras.hpp"
#include "hopf/json_io.hpp"
#include "hopf/partial.hpp"
#include "hopf/smash.hpp"

using namespace hopf;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (ok) detail << what;
    else detail << "; " << what;
    ok = false;
  }
  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int brute_force_subgroup_count(const FiniteGroup& G) {
  const int n = G.order();
  int count = 0;
  for (long mask = 1; mask < (1L << n); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) members.push_back(i);
    bool closed = true;
    for (int a : members)
      for (int b : members)
        if (!(mask >> G.mul(a, G.inv(b)) & 1)) closed = false;
    count += closed;
  }
  return count;
}

/// Ideal of the single point lambda in the ring with one unknown per basis element.
std::vector<Poly> point_ideal(const PolyRing& R, const Vec& lambda) {
  std::vector<Poly> I;
  for (int b = 0; b < R.nvars(); ++b) I.push_back(Poly::var(R, b) - Poly(R, lambda[b]));
  return I;
}

std::vector<std::vector<Poly>> ideals_of(const std::vector<SolutionFamily>& fams) {
  std::vector<std::vector<Poly>> out;
  for (const auto& f : fams) out.push_back(f.ideal);
  return out;
}

Subgroup subgroup_of(const GroupLikeSet& GL, const std::string& spec) { return parse_subgroup(GL.group, spec); }

std::vector<SolutionFamily> families_at(const HopfAlgebra& H, const std::string& spec, std::vector<int>* var_basis = nullptr) {
  GroupLikeSet GL = group_likes(H);
  auto sol = solve_partial_actions(H, GL, subgroup_of(GL, spec));
  if (var_basis) *var_basis = sol.var_basis;
  return sol.families;
}

Poly value_var(const HopfAlgebra& H, const SolutionFamily& f, const std::vector<int>& var_basis, const std::string& label) {
  const int b = H.require_index(label);
  for (std::size_t v = 0; v < var_basis.size(); ++v)
    if (var_basis[v] == b) return Poly::var(f.ring, static_cast<int>(v));
  throw UnknownName(label + " is not a value-ring unknown");
}

void table_regression(Outcome& o, const std::vector<std::string>& names, double limit) {
  double worst = 0;
  int rows = 0;
  for (const auto& name : names) {
    auto t0 = std::chrono::steady_clock::now();
    Table t = load_table(name);
    TableCheck c = verify_table(get_algebra(name), t);
    const double s = seconds_since(t0);
    worst = std::max(worst, s);
    rows += static_cast<int>(t.rows.size());
    if (!c.ok) {
      std::string why;
      for (const auto& e : c.errors) why += " " + e;
      for (const auto& sc : c.subgroups)
        if (!sc.ok) why += " " + sc.subgroup + ": " + sc.detail;
      o.fail(name + why);
    }
    o.require(s < limit, name + " took " + std::to_string(s) + " s");
    for (const auto& e : c.errata) o.detail << "[" << name << " corrected row " << e << "] ";
  }
  o.detail << names.size() << " algebras, " << rows << " rows, slowest " << worst << " s";
}

// ---------------------------------------------------------------------------

void c1_axioms(Outcome& o) {
  int n = 0;
  for (const auto& e : catalog()) {
    HopfAlgebra H = e.build();
    AxiomReport r = check_hopf_axioms(H);
    o.require(r.ok, e.name + " fails the axiom suite");
    o.require(H.dim == e.expected_dim, e.name + " has the wrong dimension");
    ++n;
  }
  for (const auto& id : tensor_identifications())
    o.require(is_hopf_morphism(get_algebra(id.algebra), get_algebra(id.tensor),
                               parse_images(get_algebra(id.tensor), id.images)),
              id.algebra + " is not identified with " + id.tensor);
  o.detail << n << " algebras";
}

void c2_dim8(Outcome& o) {
  bool gamma_row = false;
  for (const auto& row : table_rows("A4''"))
    for (const auto& c : row.constraints) gamma_row = gamma_row || c == "gamma^2 + 1";
  o.require(gamma_row, "A4'' has no gamma^2 = -1 row");
  std::vector<int> vb;
  HopfAlgebra A = get_algebra("A4''");
  auto fams = families_at(A, "1", &vb);
  o.require(fams.size() == 1, "A4'' {1} family count");
  if (fams.size() == 1) {
    const Poly x = value_var(A, fams[0], vb, "x");
    o.require(radical_contains(fams[0].ideal, x * x + Poly::constant(fams[0].ring, 1)), "A4'' {1} misses lambda(x)^2 = -1");
  }
  table_regression(o, {"A2", "A4'", "A4''", "A4'''", "A22"}, 10);
}

void c3_dim16(Outcome& o) {
  std::vector<std::string> names;
  for (int i = 1; i <= 29; ++i) names.push_back("H" + std::to_string(i));

  o.require(families_at(get_algebra("H6"), "1").empty(), "H6 has a partial action with initial condition {1}");

  std::vector<int> vb;
  HopfAlgebra H9 = get_algebra("H9");
  auto f9 = families_at(H9, "1", &vb);
  o.require(!f9.empty(), "H9 {1} has no family");
  for (const auto& f : f9) {
    const Poly gw = value_var(H9, f, vb, "x") * value_var(H9, f, vb, "y");
    o.require(radical_contains(f.ideal, value_var(H9, f, vb, "gxy") + gw), "H9 lambda(gxy) != -gamma omega");
    o.require(radical_contains(f.ideal, value_var(H9, f, vb, "g^3xy") - gw), "H9 lambda(g^3xy) != gamma omega");
  }

  HopfAlgebra H15 = get_algebra("H15");
  auto f15 = families_at(H15, "1", &vb);
  o.require(!f15.empty(), "H15 {1} has no family");
  for (const auto& f : f15)
    o.require(radical_contains(f.ideal, value_var(H15, f, vb, "x") * value_var(H15, f, vb, "y")), "H15 misses delta sigma = 0");

  HopfAlgebra H16 = get_algebra("H16");
  auto f16 = families_at(H16, "1", &vb);
  o.require(!f16.empty(), "H16 {1} has no family");
  for (const auto& f : f16) {
    const Poly half = Poly::constant(f.ring, 1).scaled(Cyclotomic(H16.order, Rational(1, 2)));
    o.require(radical_contains(f.ideal, value_var(H16, f, vb, "x") * value_var(H16, f, vb, "y") + half),
              "H16 misses Omega zeta = -1/2");
    o.require(radical_contains(f.ideal, value_var(H16, f, vb, "xy") + half), "H16 lambda(xy) != -1/2");
  }

  HopfAlgebra H17 = get_algebra("H17");
  int with_action = 0;
  for (const auto& sol : enumerate_all_partial_actions(H17)) with_action += !sol.families.empty();
  o.require(with_action == 16, "H17 has partial actions for " + std::to_string(with_action) + " subgroups");
  o.require(table_rows("H17").size() == 16, "H17 table does not have 16 rows");

  table_regression(o, names, 60);
}

void c4_group_algebras(Outcome& o) {
  for (const std::string name : {"C2", "C4", "C2xC2", "C8", "C2xC2xC2", "S3"}) {
    FiniteGroup G = named_group(name);
    HopfAlgebra kG = group_algebra(G, "k" + name);
    const int expected = brute_force_subgroup_count(G);
    auto subs = enumerate_subgroups(G);
    o.require(static_cast<int>(subs.size()) == expected, name + " subgroup count");
    auto fams = solve_full_system(kG);
    PolyRing R(kG.order, kG.labels);
    std::vector<std::vector<Poly>> points;
    std::vector<Vec> distinct;
    for (const auto& N : subs) {
      Vec l = lambda_N(kG, G, N);
      if (std::find(distinct.begin(), distinct.end(), l) == distinct.end()) distinct.push_back(l);
      points.push_back(point_ideal(fams.empty() ? R : fams[0].ring, l));
    }
    o.require(static_cast<int>(fams.size()) == expected,
              "k" + name + ": " + std::to_string(fams.size()) + " families, " + std::to_string(expected) + " subgroups");
    o.require(static_cast<int>(distinct.size()) == expected, "k" + name + ": lambda_N not distinct");
    o.require(!fams.empty() && same_variety(ideals_of(fams), points), "k" + name + ": solutions are not the lambda_N");
    int reduced = 0;
    for (const auto& sol : enumerate_all_partial_actions(kG)) reduced += static_cast<int>(sol.families.size());
    o.require(reduced == expected, "k" + name + ": reduced method count");
    o.detail << "k" << name << " " << expected << " ";
  }
}

void c5_duals(Outcome& o) {
  int checked = 0;
  for (const auto& g : detail::small_groups()) {
    FiniteGroup G = g.make();
    if (G.order() > 8) continue;
    HopfAlgebra D = dual_group_algebra(G);
    for (const auto& N : enumerate_subgroups(G)) {
      Vec l = lambda_dual_N(D, G, N);
      const Cyclotomic inv = Cyclotomic(D.order, Rational(1, static_cast<long>(N.members.size())));
      for (int h = 0; h < G.order(); ++h)
        o.require(l[h] == (N.contains(h) ? inv : Cyclotomic::zero(D.order)), g.name + ": lambda^N values");
      o.require(is_partial_action(D, l), g.name + " " + N.str(G) + ": lambda^N not a partial action");
      ++checked;
    }
  }
  for (const std::string name : {"C2", "C2xC2"}) {
    FiniteGroup G = named_group(name);
    HopfAlgebra D = get_algebra("(k" + name + ")^*");
    auto fams = solve_full_system(D);
    o.require(!fams.empty(), name + " dual: no solutions");
    if (fams.empty()) continue;
    std::vector<std::vector<Poly>> points;
    for (const auto& N : enumerate_subgroups(G)) points.push_back(point_ideal(fams[0].ring, lambda_dual_N(D, G, N)));
    o.require(same_variety(ideals_of(fams), points), "(k" + name + ")^*: solutions are not the lambda^N");
  }
  o.detail << checked << " pairs (G, N); full solver on (kC2)^*, (kC2xC2)^*";
}

void c6_sweedler(Outcome& o) {
  HopfAlgebra S = get_algebra("Sweedler");
  GroupLikeSet GL = group_likes(S);
  o.require(build_reduced_system(S, GL, subgroup_of(GL, "1")).equations.size() == 4, "reduced system size");
  auto whole = solve_partial_actions(S, GL, subgroup_of(GL, "g"));
  o.require(whole.families.size() == 1, "{1,g} family count");
  if (whole.families.size() == 1) {
    auto pt = specialize(whole.families[0]);
    o.require(whole.families[0].free_vars.empty() && pt &&
                  lambda_from_point(S, GL, whole.N, whole.var_basis, *pt) == S.counit,
              "{1,g} solution is not the counit");
  }
  std::vector<int> vb;
  auto fams = families_at(S, "1", &vb);
  o.require(fams.size() == 1, "{1} family count");
  if (fams.size() == 1) {
    const auto& f = fams[0];
    o.require(f.free_vars.size() == 1 && f.constraints.empty(), "{1} family is not one free parameter");
    o.require(ideal_contains(f.ideal, value_var(S, f, vb, "x") - value_var(S, f, vb, "gx")), "{1}: lambda(x) != lambda(gx)");
  }
  for (long a : {-3L, 0L, 1L, 2L}) {
    Vec l = S.zero();
    l[S.require_index("1")] = Cyclotomic::one(S.order);
    l[S.require_index("x")] = l[S.require_index("gx")] = Cyclotomic(S.order, Rational(a));
    o.require(is_partial_action(S, l), "lambda_alpha is not a partial action");
  }
  int total = 0;
  for (const auto& sol : enumerate_all_partial_actions(S)) total += static_cast<int>(sol.families.size());
  o.require(total == 2, "enumeration gives " + std::to_string(total) + " families");
  o.detail << "{eps} and {lambda_alpha}, 4 reduced equations";
}

void c7_carac(Outcome& o) {
  int rows = 0, carac_true = 0, strong_true = 0, corollary = 0;
  for (const auto& name : tabulated_algebras()) {
    HopfAlgebra H = get_algebra(name);
    GroupLikeSet GL = group_likes(H);
    Table t = load_table(name);
    for (const auto& row : t.rows) {
      ParsedRow P = parse_row(H, GL, t, row);
      Vec lam = row_sample(H, P, row);
      const std::string where = name + " " + P.N.str(GL.group);
      SubalgebraBasis S = compute_H_lambda(H, lam);
      const bool carac = check_carac(H, lam).holds;
      const bool strong = check_strong(H, lam).holds;
      o.require(carac == check_coproduct_closure(H, S), where + ": carac disagrees with closure");
      o.require(!strong || carac, where + ": strong without carac");
      CorollaryReport c = check_skew_corollaries(H, lam);
      o.require(c.consistent, where + ": corollary instance with carac true");
      ++rows;
      carac_true += carac;
      strong_true += strong;
      corollary += c.applies;
    }
  }
  o.detail << rows << " rows, carac true " << carac_true << ", strong true " << strong_true << ", corollary instances "
           << corollary;
}

void c8_smash(Outcome& o) {
  int checked = 0;
  for (const auto& name : tabulated_algebras()) {
    HopfAlgebra H = get_algebra(name);
    GroupLikeSet GL = group_likes(H);
    Table t = load_table(name);
    for (const auto& row : t.rows) {
      ParsedRow P = parse_row(H, GL, t, row);
      Vec lam = row_sample(H, P, row);
      o.require(smash_matches_H_lambda(H, smash_product(H, lam), compute_H_lambda(H, lam)),
                name + " " + P.N.str(GL.group) + ": smash product differs from H_lambda");
      ++checked;
    }
  }
  for (const auto& g : detail::small_groups()) {
    FiniteGroup G = g.make();
    if (G.order() > 8) continue;
    HopfAlgebra kG = group_algebra(G);
    for (const auto& N : enumerate_subgroups(G)) {
      Vec l = lambda_N(kG, G, N);
      SubalgebraBasis S = compute_H_lambda(kG, l);
      o.require(S.dim == static_cast<int>(N.members.size()), "k" + g.name + ": dim H_lambda != |N|");
      o.require(smash_matches_H_lambda(kG, smash_product(kG, l), S), "k" + g.name + ": smash product differs");
      ++checked;
    }
  }
  HopfAlgebra S = get_algebra("Sweedler");
  for (long a : {0L, 1L, 3L}) {
    const std::string alpha = std::to_string(a);
    Vec l = S.zero();
    l[S.require_index("1")] = Cyclotomic::one(S.order);
    l[S.require_index("x")] = l[S.require_index("gx")] = Cyclotomic(S.order, Rational(a));
    SubalgebraBasis B = compute_H_lambda(S, l);
    o.require(B.dim == 2, "Sweedler alpha=" + alpha + ": dim != 2");
    o.require(same_span(S.order, B.basis, {parse_element(S, "1"), parse_element(S, alpha + "g + gx")}),
              "Sweedler alpha=" + alpha + ": basis is not {1, alpha g + gx}");
    o.require(smash_matches_H_lambda(S, smash_product(S, l), B), "Sweedler: smash product differs");
  }
  o.detail << checked << " (H, lambda) pairs";
}

void c9_taft(Outcome& o) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 2}}) {
    const std::string tag = "T_" + std::to_string(n) + "^" + std::to_string(k);
    TaftWitness w = taft_lambda_hopf(n, k);
    o.require(w.dim == n * n, tag + ": dim " + std::to_string(w.dim));
    o.require(w.morphism.injective && w.image_matches, tag + ": witness does not map onto H_lambda");
    o.require(w.carac && w.closure, tag + ": H_lambda is not a sub-bialgebra");
    o.detail << tag << " -> " << w.target.name << " ";
  }
}

void c10_universality(Outcome& o) {
  for (const std::string name : {"Sweedler", "A2", "kC4"}) {
    HopfAlgebra H = get_algebra(name);
    WitnessConstruction w = lambda_hopf_witness_construction(H, cyclic_group(2, "c"));
    o.require(w.H_lambda.dim == H.dim, name + ": dim L_lambda != dim H");
    o.require(w.morphism.injective && w.image_matches, name + ": h -> h(x)1 is not onto L_lambda");
    o.require(w.carac, name + ": carac fails");
    o.detail << name << " ";
  }
}

void c11_diagram(Outcome& o) {
  auto edges = diagram_edges();
  int ok = 0;
  for (const auto& e : edges) {
    EdgeReport r = verify_edge(e);
    if (r.ok())
      ++ok;
    else
      o.fail(e.source + " -> " + e.target + " " + r.failure);
  }
  auto has = [&](const std::string& s, const std::string& t) {
    int n = 0;
    for (const auto& e : edges) n += e.source == s && e.target == t;
    return n;
  };
  o.require(has("H13", "A2") > 0, "missing H13 -> A2");
  o.require(has("H28", "A4''") > 0, "missing H28 -> A4''");
  for (const std::string s : {"H20", "H21", "H23", "H24"}) o.require(has(s, "A4'") > 0, "missing " + s + " -> A4'");
  bool h25 = false;
  for (const auto& e : edges)
    if (e.source == "H25" && e.target == "Sweedler") {
      GroupLikeSet GL = group_likes(get_algebra("H25"));
      TableRow probe;
      probe.subgroup = e.subgroup;
      h25 = h25 || row_subgroup(GL, probe) == subgroup_of(GL, "g^2");
    }
  o.require(h25, "missing H25 -> Sweedler via {1,g^2}");
  o.require(has("H17", "A22") == 3, "H17 -> A22 arrows: " + std::to_string(has("H17", "A22")));
  o.detail << ok << "/" << edges.size() << " edges";
}

void c12_full_vs_reduced(Outcome& o) {
  int branches = 0;
  for (const std::string name : {"A2", "A4'", "A4''", "A4'''", "A22"}) {
    HopfAlgebra H = get_algebra(name);
    GroupLikeSet GL = group_likes(H);
    PolyRing full(H.order, H.labels);
    for (const auto& N : enumerate_subgroups(GL.group)) {
      auto sol = solve_partial_actions(H, GL, N);
      auto fams = solve_full_system(H, std::make_pair(GL, N));
      auto a = ideals_of(fams);
      auto b = full_ring_ideals(H, GL, sol, full);
      const std::string where = name + " " + N.str(GL.group);
      if (a.empty() || b.empty())
        o.require(a.empty() && b.empty(), where + ": one method finds no solution");
      else
        o.require(same_variety(a, b), where + ": varieties differ");
      ++branches;
    }
  }
  o.detail << branches << " initial conditions";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
    double limit;
  };
  const std::vector<Criterion> criteria = {
      {"axiom suite", c1_axioms, 10},
      {"tables dim 8", c2_dim8, 50},
      {"tables dim 16", c3_dim16, 29 * 60},
      {"kG bijection", c4_group_algebras, 0},
      {"dual group algebras", c5_duals, 0},
      {"Sweedler end-to-end", c6_sweedler, 0},
      {"carac biconditional", c7_carac, 0},
      {"smash product and phi", c8_smash, 0},
      {"Taft lambda-Hopf", c9_taft, 0},
      {"universality construction", c10_universality, 0},
      {"diagram regression", c11_diagram, 0},
      {"full vs reduced system", c12_full_vs_reduced, 120},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    if (criteria[i].limit > 0 && s >= criteria[i].limit) o.fail("over time limit");
    failed += !o.ok;
    std::printf("%s %2zu %-26s %7.2f s  %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, s,
                o.detail.str().c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
