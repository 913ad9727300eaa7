// Command-line front end: enumerate partial actions, check tables and
// axioms, build H_lambda, and run the lambda-Hopf diagram.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hopf/json_io.hpp"

using namespace hopf;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  bool json = false;
  std::string subgroup;
  std::vector<std::string> sets;
  long split_budget = ExtractOptions{}.split_budget;
};

ExtractOptions extract_options(const Config& c) {
  ExtractOptions o;
  o.split_budget = c.split_budget;
  return o;
}

HopfAlgebra load_algebra(const std::string& name) {
  try {
    return get_algebra(name);
  } catch (const UnknownName& e) {
    throw UsageError(e.what());
  }
}

Subgroup select_subgroup(const FiniteGroup& G, const std::string& spec) {
  if (spec == "G") {
    std::vector<int> all;
    for (int g = 0; g < G.order(); ++g) all.push_back(g);
    return Subgroup{all};
  }
  try {
    return parse_subgroup(G, spec);
  } catch (const Error& e) {
    throw UsageError("bad subgroup selector '" + spec + "': " + e.what());
  }
}

std::map<std::string, std::string> parse_sets(const std::vector<std::string>& sets) {
  std::map<std::string, std::string> out;
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--set expects name=value, got '" + s + "'");
    out[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return out;
}

std::optional<Table> table_if_any(const std::string& name) {
  auto names = tabulated_algebras();
  if (std::find(names.begin(), names.end(), name) == names.end()) return std::nullopt;
  return load_table(name);
}

std::string braces(const std::vector<std::string>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
  return s + "}";
}

void print_grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (w.size() <= c) w.push_back(0);
      w[c] = std::max(w[c], r[c].size());
    }
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c)
      std::cout << (c ? "  " : "") << std::left << std::setw(static_cast<int>(w[c])) << r[c];
    std::cout << "\n";
  }
}

// ---------------------------------------------------------------------------

int cmd_list(const Config& cfg) {
  if (cfg.json) {
    json a = json::array();
    for (const auto& e : catalog())
      a.push_back({{"name", e.name}, {"kind", e.kind}, {"dim", e.expected_dim}, {"group_likes", e.expected_group_likes}});
    std::cout << a.dump(1) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows = {{"name", "kind", "dim", "|G(H)|"}};
  for (const auto& e : catalog())
    rows.push_back({e.name, e.kind, std::to_string(e.expected_dim),
                    e.expected_group_likes ? std::to_string(e.expected_group_likes) : "-"});
  print_grid(rows);
  return 0;
}

/// Algebras whose group-likes do not span a subgroup of the basis (duals):
/// the unreduced system is solved directly.
int partial_actions_full(const HopfAlgebra& H, const Config& cfg) {
  auto fams = solve_full_system(H, std::nullopt, extract_options(cfg));
  if (cfg.json) {
    json a = json::array();
    for (const auto& f : fams) a.push_back(to_json(f));
    std::cout << json{{"algebra", H.name}, {"families", a}}.dump(1) << "\n";
    return 0;
  }
  std::cout << H.name << ": " << fams.size() << " families (unreduced system)\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back(H.labels);
  for (const auto& f : fams) {
    std::vector<std::string> r;
    for (const auto& p : f.assignment) r.push_back(p.str(f.display_names()));
    rows.push_back(r);
  }
  print_grid(rows);
  for (const auto& f : fams)
    for (const auto& c : f.constraints) std::cout << "  constraint: " << c.str(f.display_names()) << " = 0\n";
  return 0;
}

int cmd_partial_actions(const std::string& name, const Config& cfg) {
  HopfAlgebra H = load_algebra(name);
  std::optional<GroupLikeSet> GLo;
  try {
    GLo = group_likes(H);
  } catch (const NotClosed&) {
    if (!cfg.subgroup.empty()) throw UsageError(name + " has no group-like basis; --subgroup does not apply");
    return partial_actions_full(H, cfg);
  }
  const GroupLikeSet& GL = *GLo;
  std::vector<Subgroup> subs;
  if (cfg.subgroup.empty())
    subs = enumerate_subgroups(GL.group);
  else
    subs.push_back(select_subgroup(GL.group, cfg.subgroup));

  std::vector<SubgroupSolutions> sols;
  for (const auto& N : subs) sols.push_back(solve_partial_actions(H, GL, N, extract_options(cfg)));
  std::size_t total = 0;
  for (const auto& s : sols) total += s.families.size();

  if (cfg.json) {
    json a = json::array();
    for (const auto& s : sols) a.push_back(partial_report_json(H, GL, s));
    std::cout << json{{"algebra", H.name}, {"family_count", total}, {"subgroups", a}}.dump(1) << "\n";
    return 0;
  }

  std::vector<std::string> columns;
  if (auto t = table_if_any(name))
    columns = t->columns;
  else
    for (int b = 0; b < H.dim; ++b) columns.push_back(H.labels[b]);

  std::cout << H.name << ": " << total << " families\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {""};
  header.insert(header.end(), columns.begin(), columns.end());
  rows.push_back(header);
  std::vector<std::string> notes;
  for (const auto& s : sols) {
    const std::string tag = "lambda_" + braces(s.subgroup_labels);
    if (s.families.empty()) notes.push_back("no partial action with initial condition " + braces(s.subgroup_labels));
    for (const auto& f : s.families) {
      auto lam = lambda_polys(H, GL, s.N, s.var_basis, f);
      std::vector<std::string> r = {tag};
      for (const auto& c : columns) r.push_back(lam[H.require_index(c)].str(f.display_names()));
      rows.push_back(r);
      for (const auto& c : f.constraints) notes.push_back(tag + ": " + c.str(f.display_names()) + " = 0");
    }
  }
  if (rows.size() > 1) print_grid(rows);
  for (const auto& n : notes) std::cout << n << "\n";
  return 0;
}

int cmd_verify_tables(const std::string& target, const std::string& file, const Config& cfg) {
  std::vector<std::pair<std::string, Table>> jobs;
  if (!file.empty()) {
    Table t = load_table_file(file);
    jobs.push_back({t.algebra, t});
  } else if (target == "all") {
    for (const auto& n : tabulated_algebras()) jobs.push_back({n, load_table(n)});
  } else {
    load_algebra(target);
    auto t = table_if_any(target);
    if (!t) throw UsageError("no table data for " + target);
    jobs.push_back({target, *t});
  }
  bool all_ok = true;
  json out = json::array();
  for (const auto& [name, table] : jobs) {
    TableCheck c;
    try {
      c = verify_table(load_algebra(name), table, extract_options(cfg));
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      c.algebra = name;
      c.ok = false;
      c.errors.push_back(e.what());
    }
    all_ok = all_ok && c.ok;
    if (cfg.json) {
      json subs = json::array();
      for (const auto& s : c.subgroups)
        subs.push_back({{"subgroup", s.subgroup},
                        {"ok", s.ok},
                        {"solver_families", s.solver_families},
                        {"table_rows", s.table_rows},
                        {"detail", s.detail}});
      out.push_back({{"algebra", name}, {"ok", c.ok}, {"subgroups", subs}, {"errors", c.errors}, {"errata", c.errata}});
      continue;
    }
    std::cout << (c.ok ? "pass " : "FAIL ") << name << "\n";
    for (const auto& s : c.subgroups)
      if (!s.ok)
        std::cout << "  " << s.subgroup << ": " << s.detail << " (solver " << s.solver_families << ", table "
                  << s.table_rows << ")\n";
    for (const auto& e : c.errors) std::cout << "  " << e << "\n";
    for (const auto& e : c.errata) std::cout << "  corrected row " << e << "\n";
  }
  if (cfg.json) std::cout << out.dump(1) << "\n";
  return all_ok ? 0 : 1;
}

void attach_diagram_target(SmashReport& r, const HopfAlgebra& H, const Subgroup& N) {
  GroupLikeSet GL = group_likes(H);
  for (const auto& e : diagram_edges()) {
    if (e.source != H.name) continue;
    TableRow probe;
    probe.algebra = e.source;
    probe.subgroup = e.subgroup;
    if (!(row_subgroup(GL, probe) == N)) continue;
    r.target = e.target;
    try {
      SubalgebraBasis S = compute_H_lambda(H, r.lambda);
      MorphismReport m = verify_hopf_morphism(get_algebra(e.target), H, parse_images(H, e.images));
      r.target_verified = m.injective && image_is(m, S);
    } catch (const Error&) {
      r.target_verified = false;
    }
    return;
  }
}

void print_smash(const HopfAlgebra& H, const SmashReport& r, const Config& cfg) {
  if (cfg.json) {
    std::cout << to_json(H, r).dump(1) << "\n";
    return;
  }
  auto yn = [](bool b) { return b ? "true" : "false"; };
  std::cout << "algebra      " << r.algebra << "\n";
  std::cout << "subgroup     " << braces(r.subgroup) << "\n";
  std::cout << "lambda       ";
  bool first = true;
  for (int b = 0; b < H.dim; ++b)
    if (!r.lambda[b].is_zero()) {
      std::cout << (first ? "" : ", ") << H.labels[b] << "=" << r.lambda[b].str();
      first = false;
    }
  std::cout << "\n";
  std::cout << "dim H_lambda " << r.dim << "\n";
  std::cout << "basis        ";
  for (std::size_t k = 0; k < r.basis.size(); ++k) std::cout << (k ? ", " : "") << H.format(r.basis[k]);
  std::cout << "\n";
  std::cout << "carac        " << yn(r.carac.holds) << "\n";
  if (!r.carac.holds)
    std::cout << "  witness    " << H.labels[r.carac.witness] << ": " << H.format(r.carac.lhs)
              << " != " << H.format(r.carac.rhs) << "\n";
  std::cout << "strong       " << yn(r.strong) << "\n";
  std::cout << "closure      " << yn(r.closure) << "\n";
  std::cout << "restriction  " << yn(r.restriction) << "\n";
  std::cout << "smash = H_l  " << yn(r.smash_agrees) << "\n";
  if (r.target) std::cout << "target       " << *r.target << (r.target_verified ? " (verified)" : " (NOT verified)") << "\n";
}

int cmd_smash(const std::string& name, const std::string& row_sel, int n, int k, const Config& cfg) {
  auto sets = parse_sets(cfg.sets);
  if (name == "Taft") {
    if (n < 2 || k < 1) throw UsageError("smash Taft needs --n >= 2 and --k >= 1");
    TaftWitness w = taft_lambda_hopf(n, k);
    SmashReport r = smash_report(w.T, w.lambda);
    r.target = w.target.name;
    r.target_verified = w.morphism.injective && w.image_matches;
    print_smash(w.T, r, cfg);
    return r.target_verified && r.carac.holds ? 0 : 1;
  }
  HopfAlgebra H = load_algebra(name);
  GroupLikeSet GL = group_likes(H);
  std::string sel = row_sel;
  if (sel.rfind("N=", 0) == 0) sel = sel.substr(2);
  if (sel.empty()) throw UsageError("smash needs --row N=<subgroup>");
  Subgroup N = select_subgroup(GL.group, sel);
  auto t = table_if_any(name);
  Vec lam;
  if (t) {
    std::optional<Vec> found;
    for (const auto& row : t->rows) {
      ParsedRow P = parse_row(H, GL, *t, row);
      if (!(P.N == N)) continue;
      for (const auto& [p, v] : sets)
        if (P.params.index_of(p) < 0) std::cerr << "note: row has no parameter " << p << "; ignored\n";
      found = row_sample(H, P, row, sets);
    }
    if (!found) {
      std::cerr << "no partial action with initial condition " << braces(N.labels(GL.group)) << "\n";
      return 1;
    }
    lam = *found;
  } else {
    SubgroupSolutions sol = solve_partial_actions(H, GL, N, extract_options(cfg));
    if (sol.families.empty()) {
      std::cerr << "no partial action with initial condition " << braces(N.labels(GL.group)) << "\n";
      return 1;
    }
    std::map<std::string, Cyclotomic> pref;
    const SolutionFamily& f = sol.families.front();
    for (const auto& [p, v] : sets) pref[p] = parse_scalar(v, H.order);
    auto pt = specialize(f, pref);
    if (!pt) throw Error("could not specialize the family of " + braces(N.labels(GL.group)));
    lam = lambda_from_point(H, GL, N, sol.var_basis, *pt);
  }
  SmashReport r = smash_report(H, lam);
  attach_diagram_target(r, H, N);
  print_smash(H, r, cfg);
  return 0;
}

int cmd_check_axioms(const std::string& target, const Config& cfg) {
  std::vector<std::pair<std::string, std::function<HopfAlgebra()>>> jobs;
  if (target == "all") {
    for (const auto& e : catalog()) jobs.push_back({e.name, e.build});
  } else if (fs::exists(target) && fs::is_regular_file(target)) {
    PresentationSpec S = load_presentation(target);
    jobs.push_back({S.name, [S] { return build_hopf(S); }});
  } else {
    load_algebra(target);
    jobs.push_back({target, [target] { return get_algebra(target); }});
  }
  bool all_ok = true;
  json out = json::array();
  for (const auto& [name, build] : jobs) {
    AxiomReport rep;
    int dim = 0;
    try {
      HopfAlgebra H = build();
      dim = H.dim;
      rep = check_hopf_axioms(H);
    } catch (const Error& e) {
      rep.ok = false;
      rep.failures.push_back(e.what());
    }
    all_ok = all_ok && rep.ok;
    if (cfg.json) {
      out.push_back({{"algebra", name}, {"dim", dim}, {"ok", rep.ok}, {"failures", rep.failures}});
      continue;
    }
    std::cout << (rep.ok ? "pass " : "FAIL ") << name << " (dim " << dim << ")\n";
    for (std::size_t i = 0; i < rep.failures.size() && i < 5; ++i) std::cout << "  " << rep.failures[i] << "\n";
  }
  if (cfg.json) std::cout << out.dump(1) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_lambda_hopf_report(const Config& cfg) {
  bool all_ok = true;
  json out = json::array();
  std::vector<std::vector<std::string>> rows = {{"source", "lambda", "target", "dim", "carac", "closure", "iso", ""}};
  for (const auto& e : diagram_edges()) {
    EdgeReport r = verify_edge(e);
    all_ok = all_ok && r.ok();
    const std::string iso = r.morphism_ok && r.injective && r.image_matches ? "yes" : "no";
    if (cfg.json) {
      out.push_back({{"source", e.source},
                     {"subgroup", e.subgroup},
                     {"target", e.target},
                     {"images", e.images},
                     {"dim", r.dim},
                     {"carac", r.carac},
                     {"closure", r.closure},
                     {"isomorphism", iso == "yes"},
                     {"ok", r.ok()},
                     {"failure", r.failure}});
      continue;
    }
    rows.push_back({e.source, "lambda_" + braces(e.subgroup), e.target, std::to_string(r.dim), r.carac ? "true" : "false",
                    r.closure ? "true" : "false", iso, r.ok() ? "ok" : "FAIL " + r.failure});
  }
  if (cfg.json)
    std::cout << out.dump(1) << "\n";
  else
    print_grid(rows);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial actions of pointed Hopf algebras on the base field"};
  app.require_subcommand(1);
  Config cfg;
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--split-budget", cfg.split_budget, "Maximum number of branches when splitting ideals");

  auto* list = app.add_subcommand("list-algebras", "List the catalog");

  std::string pa_name;
  auto* pa = app.add_subcommand("partial-actions", "Enumerate partial actions on the base field");
  pa->add_option("algebra", pa_name)->required();
  pa->add_option("--subgroup", cfg.subgroup, "Initial condition, as generators of N (e.g. g^2,h) or G");

  std::string vt_name = "all", vt_file;
  auto* vt = app.add_subcommand("verify-tables", "Compare the solver with the tabulated partial actions");
  vt->add_option("algebra", vt_name, "Algebra name or all");
  vt->add_option("--file", vt_file, "Table file to check instead of the data directory");

  std::string sm_name, sm_row;
  int sm_n = 0, sm_k = 0;
  auto* sm = app.add_subcommand("smash", "H_lambda for one partial action");
  sm->add_option("algebra", sm_name)->required();
  sm->add_option("--row", sm_row, "Table row, as N=<generators>");
  sm->add_option("--set", cfg.sets, "Parameter value, name=value")->allow_extra_args(false);
  sm->add_option("--n", sm_n, "Taft nilpotency order");
  sm->add_option("--k", sm_k, "Taft group index");

  std::string ax_target = "all";
  auto* ax = app.add_subcommand("check-axioms", "Hopf algebra axioms");
  ax->add_option("target", ax_target, "Algebra name, all, or a presentation JSON file");

  auto* lh = app.add_subcommand("lambda-hopf-report", "Verify every edge of the lambda-Hopf diagram");

  for (auto* sub : {list, pa, vt, sm, ax, lh}) {
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_option("--split-budget", cfg.split_budget, "Maximum number of branches when splitting ideals");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*list) return cmd_list(cfg);
    if (*pa) return cmd_partial_actions(pa_name, cfg);
    if (*vt) return cmd_verify_tables(vt_name, vt_file, cfg);
    if (*sm) return cmd_smash(sm_name, sm_row, sm_n, sm_k, cfg);
    if (*ax) return cmd_check_axioms(ax_target, cfg);
    if (*lh) return cmd_lambda_hopf_report(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
