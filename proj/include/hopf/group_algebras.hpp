#pragma once
// Group algebras kG, their duals (kG)^*, and the partial actions attached to
// subgroups.

#include <numeric>
#include <string>
#include <vector>

#include "hopf/groups.hpp"
#include "hopf/hopfcore.hpp"

namespace hopf {

inline int default_field_order(const FiniteGroup& G) { return std::lcm(G.exponent(), 4); }

/// kG: basis = group elements (same indices as G), Delta(g) = g (x) g.
inline HopfAlgebra group_algebra(const FiniteGroup& G, const std::string& name = "", int field_order = 0) {
  PointedPresentation P;
  P.name = name.empty() ? "kG" : name;
  P.field_order = field_order ? field_order : default_field_order(G);
  P.group = G;
  P.expected_dim = G.order();
  return build_hopf(P);
}

/// (kG)^*: basis g^* with g^* h^* = delta_{g,h} g^*, Delta(g^*) = sum_{uv=g} u^* (x) v^*.
inline HopfAlgebra dual_group_algebra(const FiniteGroup& G, const std::string& name = "", int field_order = 0) {
  const int n = G.order();
  const int m = field_order ? field_order : default_field_order(G);
  HopfAlgebra H;
  H.name = name.empty() ? "(kG)^*" : name;
  H.dim = n;
  H.order = m;
  for (int g = 0; g < n; ++g) H.labels.push_back(G.label(g) + "*");
  H.mult.resize(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g) H.mult[static_cast<std::size_t>(g) * n + g] = {{g, Cyclotomic::one(m)}};
  H.unit.assign(n, Cyclotomic::one(m));
  H.comult.resize(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) H.comult[G.mul(u, v)].push_back({Cyclotomic::one(m), u, v});
  H.counit.assign(n, Cyclotomic::zero(m));
  H.counit[G.identity()] = Cyclotomic::one(m);
  H.antipode.resize(n);
  for (int g = 0; g < n; ++g) H.antipode[g] = {{G.inv(g), Cyclotomic::one(m)}};
  AxiomReport rep = check_hopf_axioms(H);
  if (!rep.ok) throw AxiomFailure(H.name + ": " + rep.failures.front());
  return H;
}

/// Indicator of N on the basis of kG.
inline Vec lambda_N(const HopfAlgebra& kG, const FiniteGroup& G, const Subgroup& N) {
  if (kG.dim != G.order()) throw DimensionMismatch("group algebra and group differ in size");
  Vec v = kG.zero();
  for (int g : N.members) v[g] = Cyclotomic::one(kG.order);
  return v;
}

/// g^* |-> 1/|N| for g in N, else 0.
inline Vec lambda_dual_N(const HopfAlgebra& dual, const FiniteGroup& G, const Subgroup& N) {
  if (dual.dim != G.order()) throw DimensionMismatch("dual group algebra and group differ in size");
  Vec v = dual.zero();
  for (int g : N.members) v[g] = Cyclotomic(dual.order, Rational(1, N.order()));
  return v;
}

}  // namespace hopf
