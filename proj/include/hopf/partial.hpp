#pragma once
// Partial actions of a Hopf algebra on its base field: verification,
// transversal bookkeeping, the N-reduced polynomial system and its solution.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopf/error.hpp"
#include "hopf/groups.hpp"
#include "hopf/hopfcore.hpp"
#include "hopf/polysolve.hpp"

namespace hopf {

inline Cyclotomic apply_functional(const Vec& lambda, const Vec& u) {
  Cyclotomic r = Cyclotomic::zero(lambda.at(0).order());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero() && !lambda[i].is_zero()) r += u[i] * lambda[i];
  return r;
}

inline Cyclotomic apply_functional(const Vec& lambda, const Sparse& u) {
  Cyclotomic r = Cyclotomic::zero(lambda.at(0).order());
  for (const auto& e : u) r += e.coeff * lambda[e.index];
  return r;
}

/// lambda(h) lambda(k) - lambda(h_1) lambda(h_2 k) on basis elements h, k.
inline Cyclotomic partial_defect(const HopfAlgebra& H, const Vec& lambda, int h, int k) {
  Cyclotomic r = lambda[h] * lambda[k];
  for (const auto& t : H.comult[h]) {
    if (lambda[t.left].is_zero()) continue;
    r -= t.coeff * lambda[t.left] * apply_functional(lambda, H.mult_basis(t.right, k));
  }
  return r;
}

inline bool is_partial_action(const HopfAlgebra& H, const Vec& lambda) {
  if (static_cast<int>(lambda.size()) != H.dim) return false;
  if (!apply_functional(lambda, H.unit).is_one()) return false;
  for (int h = 0; h < H.dim; ++h)
    for (int k = 0; k < H.dim; ++k)
      if (!partial_defect(H, lambda, h, k).is_zero()) return false;
  return true;
}

/// lambda(h) lambda(k) = lambda(h_1 k) lambda(h_2) on all basis pairs.
inline bool is_symmetric(const HopfAlgebra& H, const Vec& lambda) {
  if (!is_partial_action(H, lambda)) throw NotAPartialAction(H.name + ": symmetry asked of a non-partial action");
  for (int h = 0; h < H.dim; ++h)
    for (int k = 0; k < H.dim; ++k) {
      Cyclotomic r = lambda[h] * lambda[k];
      for (const auto& t : H.comult[h]) {
        if (lambda[t.right].is_zero()) continue;
        r -= t.coeff * apply_functional(lambda, H.mult_basis(t.left, k)) * lambda[t.right];
      }
      if (!r.is_zero()) return false;
    }
  return true;
}

/// Convolution square lambda * lambda.
inline Vec convolution_square(const HopfAlgebra& H, const Vec& lambda) {
  Vec out = H.zero();
  for (int h = 0; h < H.dim; ++h)
    for (const auto& t : H.comult[h]) out[h] += t.coeff * lambda[t.left] * lambda[t.right];
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic versions (lambda given by polynomials)

inline Poly apply_functional(const std::vector<Poly>& lambda, const Sparse& u) {
  Poly r(lambda.at(0).ring());
  for (const auto& e : u) r += lambda[e.index].scaled(e.coeff);
  return r;
}

/// All defects of the partial-action equation, plus lambda(1) - 1.
inline std::vector<Poly> partial_defects(const HopfAlgebra& H, const std::vector<Poly>& lambda) {
  const PolyRing& R = lambda.at(0).ring();
  std::vector<Poly> out;
  Sparse unit;
  for (int i = 0; i < H.dim; ++i)
    if (!H.unit[i].is_zero()) unit.push_back({i, H.unit[i]});
  out.push_back(apply_functional(lambda, unit) - Poly::constant(R, 1));
  for (int h = 0; h < H.dim; ++h)
    for (int k = 0; k < H.dim; ++k) {
      Poly r = lambda[h] * lambda[k];
      for (const auto& t : H.comult[h]) {
        if (lambda[t.left].is_zero()) continue;
        r -= (lambda[t.left] * apply_functional(lambda, H.mult_basis(t.right, k))).scaled(t.coeff);
      }
      out.push_back(r);
    }
  return out;
}

inline std::vector<Poly> symmetric_defects(const HopfAlgebra& H, const std::vector<Poly>& lambda) {
  std::vector<Poly> out;
  for (int h = 0; h < H.dim; ++h)
    for (int k = 0; k < H.dim; ++k) {
      Poly r = lambda[h] * lambda[k];
      for (const auto& t : H.comult[h]) {
        if (lambda[t.right].is_zero()) continue;
        r -= (apply_functional(lambda, H.mult_basis(t.left, k)) * lambda[t.right]).scaled(t.coeff);
      }
      out.push_back(r);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Transversals and the reduced system

struct TransversalData {
  GroupLikeSet group_likes;
  Subgroup N;                      // in group-like indices
  std::vector<int> N_basis;        // basis indices of N
  std::vector<int> non_group_like; // B' in basis order
  std::vector<std::vector<int>> classes;
  std::vector<int> rep_of;         // basis index -> representative (-1 on group-likes)
  Vec scale;                       // lambda(b) = scale[b] * lambda(rep_of[b])
  std::vector<int> transversal;    // representatives
  std::vector<int> perp;           // B' minus representatives
  std::vector<SkewPrimitive> B_ts; // skew-primitives x in P_{t,s}, t in N, s not in N
  std::vector<int> reduced;        // transversal minus the x of B_ts

  bool in_N(int basis) const {
    return std::find(N_basis.begin(), N_basis.end(), basis) != N_basis.end();
  }
};

inline TransversalData build_transversal(const HopfAlgebra& H, const GroupLikeSet& GL, const Subgroup& N) {
  TransversalData T;
  T.group_likes = GL;
  T.N = N;
  for (int g : N.members) T.N_basis.push_back(GL.elements.at(g));
  std::sort(T.N_basis.begin(), T.N_basis.end());
  T.rep_of.assign(H.dim, -1);
  T.scale.assign(H.dim, Cyclotomic::zero(H.order));
  for (int b = 0; b < H.dim; ++b)
    if (!GL.contains(b)) T.non_group_like.push_back(b);
  for (int x : T.non_group_like) {
    if (T.rep_of[x] >= 0) continue;
    // orbit of x under left multiplication by N; x is the smallest index so far
    std::vector<std::pair<int, Cyclotomic>> orbit;
    for (int g : T.N_basis) {
      const Sparse& p = H.mult_basis(g, x);
      if (p.size() != 1 || GL.contains(p[0].index))
        throw NotPermutation(H.name + ": " + H.labels[g] + "*" + H.labels[x] + " is not a multiple of a basis monomial");
      orbit.push_back({p[0].index, p[0].coeff});
    }
    int rep = x;
    for (auto& [y, c] : orbit) rep = std::min(rep, y);
    // express every member through rep: g*rep = c*y  =>  lambda(y) = lambda(rep)/c
    std::vector<int> cls;
    for (int g : T.N_basis) {
      const Sparse& p = H.mult_basis(g, rep);
      if (p.size() != 1 || GL.contains(p[0].index))
        throw NotPermutation(H.name + ": " + H.labels[g] + "*" + H.labels[rep] + " is not a multiple of a basis monomial");
      int y = p[0].index;
      if (T.rep_of[y] >= 0) {
        if (T.rep_of[y] != rep || T.scale[y] != p[0].coeff.inverse())
          throw NotPermutation(H.name + ": inconsistent scalars in the class of " + H.labels[rep]);
        continue;
      }
      T.rep_of[y] = rep;
      T.scale[y] = p[0].coeff.inverse();
      cls.push_back(y);
    }
    std::sort(cls.begin(), cls.end());
    T.classes.push_back(cls);
    T.transversal.push_back(rep);
  }
  std::sort(T.transversal.begin(), T.transversal.end());
  for (int x : T.non_group_like)
    if (T.rep_of[x] != x) T.perp.push_back(x);
  for (const auto& sp : skew_primitives(H))
    if (T.in_N(sp.t) && !T.in_N(sp.s)) T.B_ts.push_back(sp);
  for (int x : T.transversal) {
    bool in_B = false;
    for (const auto& sp : T.B_ts) in_B = in_B || sp.x == x;
    if (!in_B) T.reduced.push_back(x);
  }
  return T;
}

inline TransversalData build_transversal(const HopfAlgebra& H, const Subgroup& N) {
  return build_transversal(H, group_likes(H), N);
}

struct ReducedSystem {
  TransversalData data;
  PolyRing ring;                   // one unknown per representative
  std::vector<int> var_basis;      // unknown -> basis index
  std::vector<Poly> equations;     // |reduced| * dim equations, zero ones included
  std::vector<Poly> Lambda;        // Lambda(b) for every basis element
};

inline ReducedSystem build_reduced_system(const HopfAlgebra& H, const GroupLikeSet& GL, const Subgroup& N) {
  ReducedSystem S;
  S.data = build_transversal(H, GL, N);
  const auto& T = S.data;
  std::vector<std::string> names;
  for (int b : T.transversal) {
    names.push_back(H.labels[b]);
    S.var_basis.push_back(b);
  }
  S.ring = PolyRing(H.order, names);
  for (int b = 0; b < H.dim; ++b) {
    if (GL.contains(b)) {
      S.Lambda.push_back(Poly::constant(S.ring, T.in_N(b) ? 1 : 0));
    } else {
      int v = static_cast<int>(std::find(T.transversal.begin(), T.transversal.end(), T.rep_of[b]) - T.transversal.begin());
      S.Lambda.push_back(Poly::var(S.ring, v).scaled(T.scale[b]));
    }
  }
  for (int u : T.reduced)
    for (int v = 0; v < H.dim; ++v) {
      Poly r = S.Lambda[u] * S.Lambda[v];
      for (const auto& t : H.comult[u]) {
        if (S.Lambda[t.left].is_zero()) continue;
        r -= (S.Lambda[t.left] * apply_functional(S.Lambda, H.mult_basis(t.right, v))).scaled(t.coeff);
      }
      S.equations.push_back(r);
    }
  return S;
}

inline ReducedSystem build_reduced_system(const HopfAlgebra& H, const Subgroup& N) {
  return build_reduced_system(H, group_likes(H), N);
}

// ---------------------------------------------------------------------------
// Solving

/// Families for one initial condition N, expressed in the ring with one
/// unknown per non-group-like basis element ("value ring").
struct SubgroupSolutions {
  Subgroup N;
  std::vector<std::string> subgroup_labels;
  PolyRing ring;
  std::vector<int> var_basis;  // value-ring unknown -> basis index
  std::vector<SolutionFamily> families;
  std::size_t equation_count = 0;
};

/// The value ring of H: one unknown per non-group-like basis element.
inline std::pair<PolyRing, std::vector<int>> value_ring(const HopfAlgebra& H, const GroupLikeSet& GL) {
  std::vector<std::string> names;
  std::vector<int> basis;
  for (int b = 0; b < H.dim; ++b)
    if (!GL.contains(b)) {
      names.push_back(H.labels[b]);
      basis.push_back(b);
    }
  return {PolyRing(H.order, names), basis};
}

inline SubgroupSolutions solve_partial_actions(const HopfAlgebra& H, const GroupLikeSet& GL, const Subgroup& N,
                                               const ExtractOptions& opt = {}) {
  ReducedSystem S = build_reduced_system(H, GL, N);
  SubgroupSolutions out;
  out.N = N;
  out.subgroup_labels = N.labels(GL.group);
  auto [R, basis] = value_ring(H, GL);
  out.ring = R;
  out.var_basis = basis;
  out.equation_count = S.equations.size();
  std::vector<int> map;  // reduced unknown -> value unknown
  for (int b : S.var_basis)
    map.push_back(static_cast<int>(std::find(basis.begin(), basis.end(), b) - basis.begin()));
  std::vector<Poly> system;
  for (const auto& eq : S.equations)
    if (!eq.is_zero()) system.push_back(eq.remap(R, map));
  for (int y : S.data.perp) {
    int vy = static_cast<int>(std::find(basis.begin(), basis.end(), y) - basis.begin());
    int vr = static_cast<int>(std::find(basis.begin(), basis.end(), S.data.rep_of[y]) - basis.begin());
    system.push_back(Poly::var(R, vy) - Poly::var(R, vr).scaled(S.data.scale[y]));
  }
  out.families = extract_families(system, R, opt);
  return out;
}

inline SubgroupSolutions solve_partial_actions(const HopfAlgebra& H, const Subgroup& N, const ExtractOptions& opt = {}) {
  return solve_partial_actions(H, group_likes(H), N, opt);
}

inline std::vector<SubgroupSolutions> enumerate_all_partial_actions(const HopfAlgebra& H, const ExtractOptions& opt = {}) {
  GroupLikeSet GL = group_likes(H);
  std::vector<SubgroupSolutions> out;
  for (const auto& N : enumerate_subgroups(GL.group)) out.push_back(solve_partial_actions(H, GL, N, opt));
  return out;
}

/// lambda on all of H from a point of the value ring.
inline Vec lambda_from_point(const HopfAlgebra& H, const GroupLikeSet& GL, const Subgroup& N,
                             const std::vector<int>& var_basis, const std::vector<Cyclotomic>& point) {
  Vec lam = H.zero();
  for (int g : N.members) lam[GL.elements[g]] = Cyclotomic::one(H.order);
  for (std::size_t v = 0; v < var_basis.size(); ++v) lam[var_basis[v]] = point[v];
  return lam;
}

/// lambda on all of H as polynomials of a family (group-likes fixed by N).
inline std::vector<Poly> lambda_polys(const HopfAlgebra& H, const GroupLikeSet& GL, const Subgroup& N,
                                      const std::vector<int>& var_basis, const SolutionFamily& fam) {
  std::vector<Poly> lam(H.dim, Poly(fam.ring));
  for (int g : N.members) lam[GL.elements[g]] = Poly::constant(fam.ring, 1);
  for (std::size_t v = 0; v < var_basis.size(); ++v) lam[var_basis[v]] = fam.assignment[v];
  return lam;
}

/// "true", "false" or "parameter-dependent" for the symmetric condition on a family.
inline std::string symmetric_verdict(const HopfAlgebra& H, const GroupLikeSet& GL, const Subgroup& N,
                                     const std::vector<int>& var_basis, const SolutionFamily& fam) {
  auto lam = lambda_polys(H, GL, N, var_basis, fam);
  auto defects = symmetric_defects(H, lam);
  bool all_zero = true;
  for (const auto& d : defects)
    if (!ideal_contains(fam.ideal, d)) all_zero = false;
  if (all_zero) return "true";
  if (is_unit_ideal(groebner_extend(fam.ideal, defects))) return "false";
  return "parameter-dependent";
}

// ---------------------------------------------------------------------------
// The unreduced system, one unknown per basis element

struct FullSystem {
  PolyRing ring;
  std::vector<Poly> equations;
};

/// Lambda(1) = 1 and Lambda(a) Lambda(b) = Lambda(a_1) Lambda(a_2 b) for all
/// basis pairs; `initial` adds Lambda(g) = [g in N] for group-like basis g.
inline FullSystem full_partial_system(const HopfAlgebra& H, const std::optional<std::pair<GroupLikeSet, Subgroup>>& initial = {}) {
  FullSystem S{PolyRing(H.order, H.labels), {}};
  std::vector<Poly> lam;
  for (int b = 0; b < H.dim; ++b) lam.push_back(Poly::var(S.ring, b));
  for (auto& p : partial_defects(H, lam))
    if (!p.is_zero()) S.equations.push_back(p);
  if (initial) {
    const auto& [GL, N] = *initial;
    for (std::size_t k = 0; k < GL.elements.size(); ++k) {
      int b = GL.elements[k];
      S.equations.push_back(Poly::var(S.ring, b) - Poly::constant(S.ring, N.contains(static_cast<int>(k)) ? 1 : 0));
    }
  }
  return S;
}

inline std::vector<SolutionFamily> solve_full_system(const HopfAlgebra& H,
                                                     const std::optional<std::pair<GroupLikeSet, Subgroup>>& initial = {},
                                                     const ExtractOptions& opt = {}) {
  FullSystem S = full_partial_system(H, initial);
  return extract_families(S.equations, S.ring, opt);
}

/// Family ideals of a subgroup solution, carried into the full ring
/// (one unknown per basis element, group-likes fixed by N).
inline std::vector<std::vector<Poly>> full_ring_ideals(const HopfAlgebra& H, const GroupLikeSet& GL,
                                                       const SubgroupSolutions& sol, const PolyRing& full) {
  std::vector<std::vector<Poly>> out;
  for (const auto& fam : sol.families) {
    std::vector<Poly> I;
    for (const auto& g : fam.ideal) I.push_back(g.remap(full, sol.var_basis));
    for (std::size_t k = 0; k < GL.elements.size(); ++k)
      I.push_back(Poly::var(full, GL.elements[k]) -
                  Poly::constant(full, sol.N.contains(static_cast<int>(k)) ? 1 : 0));
    out.push_back(I);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Property suite

struct PropertyReport {
  bool ok = true;
  std::vector<std::string> failures;
  int checks = 0;
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      ok = false;
      if (failures.size() < 20) failures.push_back(what);
    }
  }
};

inline PropertyReport check_property_suite(const HopfAlgebra& H, const Vec& lambda) {
  if (!is_partial_action(H, lambda)) throw NotAPartialAction(H.name + ": property suite needs a partial action");
  PropertyReport rep;
  GroupLikeSet GL = group_likes(H);
  const FiniteGroup& G = GL.group;
  auto lam = [&](int basis) { return lambda[basis]; };
  auto lamv = [&](const Sparse& s) { return apply_functional(lambda, s); };
  const Cyclotomic one = Cyclotomic::one(H.order);
  std::vector<int> N;
  for (int g = 0; g < G.order(); ++g) {
    const Cyclotomic& v = lam(GL.elements[g]);
    rep.expect(v.is_zero() || v.is_one(), "lambda(" + G.label(g) + ") is not 0 or 1");
    if (v.is_one()) N.push_back(g);
  }
  rep.expect(is_subgroup(G, N), "lambda^-1(1) among group-likes is not a subgroup");
  for (int g = 0; g < G.order(); ++g) {
    int p = G.element_order(g);
    bool prime = p > 1;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime || !lam(GL.elements[g]).is_zero()) continue;
    for (int i = 1; i < p; ++i)
      rep.expect(lam(GL.elements[G.power(g, i)]).is_zero(), "prime-order vanishing fails at " + G.label(g));
  }
  auto mul = [&](int a, int b) { return H.mult_basis(a, b); };
  auto gl_basis = [&](int g) { return GL.elements[g]; };
  // (a) for every group-like with lambda(g) = 1
  for (int g = 0; g < G.order(); ++g) {
    if (!lam(gl_basis(g)).is_one()) continue;
    for (int u = 0; u < H.dim; ++u)
      rep.expect(lamv(mul(gl_basis(g), u)) == lam(u), "(a) fails for " + G.label(g) + ", " + H.labels[u]);
  }
  for (const auto& sp : skew_primitives(H)) {
    // x in P_{g,t}: Delta(x) = x (x) g + t (x) x
    const int x = sp.x, gb = sp.t, tb = sp.s;
    const int g = GL.group_index(gb), t = GL.group_index(tb);
    const Cyclotomic &lg = lam(gb), &lt = lam(tb), &lx = lam(x);
    const std::string where = " for " + H.labels[x];
    if (lg == lt) rep.expect(lx.is_zero(), "(b) fails" + where);
    if (lx.is_zero() && lt.is_one())
      for (int u = 0; u < H.dim; ++u) rep.expect(lamv(mul(x, u)).is_zero(), "(c) fails" + where + ", " + H.labels[u]);
    if (lg.is_one() && lt.is_zero())
      rep.expect(lamv(mul(x, gl_basis(G.inv(t)))) == -lx, "(d) fails" + where);
    if (lg.is_zero() && lt.is_one())
      rep.expect(lamv(mul(x, gl_basis(G.inv(g)))) == -lx, "(e) fails" + where);
    if (G.mul(g, t) != G.mul(t, g)) continue;
    const int ord = std::max(G.element_order(g), G.element_order(t));
    for (int i = 0; i < ord; ++i) {
      if (lg.is_one() && lt.is_zero()) {
        int ti = G.power(t, i), ti1 = G.power(t, i + 1);
        rep.expect(lamv(mul(gl_basis(ti), x)).is_zero() || lam(gl_basis(ti)) + lam(gl_basis(ti1)) == one,
                   "(f) fails" + where);
      }
      if (lg.is_zero() && lt.is_one()) {
        int gi = G.power(g, i), gi1 = G.power(g, i + 1);
        rep.expect(lamv(mul(gl_basis(gi), x)).is_zero() || lam(gl_basis(gi)) + lam(gl_basis(gi1)) == one,
                   "(g) fails" + where);
      }
    }
    if (lg.is_zero() && lt.is_zero()) {
      int w = G.mul(G.inv(g), G.inv(t));
      rep.expect(lamv(mul(gl_basis(w), x)).is_zero(), "(h) fails" + where);
    }
  }
  rep.expect(convolution_square(H, lambda) == lambda, "lambda is not a convolution idempotent");
  return rep;
}

}  // namespace hopf
