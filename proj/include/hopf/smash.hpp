#pragma once
// Deformations H_lambda = {lambda(h_1) h_2}, the partial smash product with
// the base field, the Hopf-subalgebra criterion and morphism witnesses.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopf/catalog.hpp"
#include "hopf/error.hpp"
#include "hopf/group_algebras.hpp"
#include "hopf/hopfcore.hpp"
#include "hopf/partial.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Exact linear algebra on coordinate vectors

/// Incremental row echelon form that remembers how each row was made from
/// the inserted vectors.
class SpanSolver {
 public:
  explicit SpanSolver(int order) : order_(order) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  /// Adds v; returns false (and keeps nothing) when v is already in the span.
  bool insert(const Vec& v) {
    Vec r = v;
    Vec combo(inserted_ + 1, Cyclotomic::zero(order_));
    combo[inserted_] = Cyclotomic::one(order_);
    for (auto& c : combos_) c.resize(inserted_ + 1, Cyclotomic::zero(order_));
    reduce(r, combo);
    int p = first_nonzero(r);
    if (p < 0) {
      for (auto& c : combos_) c.resize(inserted_, Cyclotomic::zero(order_));
      return false;
    }
    Cyclotomic inv = r[p].inverse();
    for (auto& x : r) x *= inv;
    for (auto& x : combo) x *= inv;
    rows_.push_back(r);
    combos_.push_back(combo);
    pivots_.push_back(p);
    ++inserted_;
    return true;
  }

  bool contains(const Vec& v) const {
    Vec r = v;
    reduce_only(r);
    return first_nonzero(r) < 0;
  }

  /// Coefficients c with v = sum_k c_k (k-th accepted vector), if v is in the span.
  std::optional<Vec> coordinates(const Vec& v) const {
    Vec r = v;
    Vec combo(inserted_, Cyclotomic::zero(order_));
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Cyclotomic c = r[pivots_[k]];
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (!rows_[k][i].is_zero()) r[i] -= c * rows_[k][i];
      for (int i = 0; i < inserted_; ++i)
        if (!combos_[k][i].is_zero()) combo[i] += c * combos_[k][i];
    }
    if (first_nonzero(r) >= 0) return std::nullopt;
    return combo;
  }

  /// Reduced row echelon basis of the span.
  std::vector<Vec> rref() const {
    std::vector<Vec> R = rows_;
    std::vector<std::size_t> order(R.size());
    for (std::size_t k = 0; k < R.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    for (std::size_t k = 0; k < R.size(); ++k)
      for (std::size_t j = 0; j < R.size(); ++j) {
        if (j == k) continue;
        Cyclotomic c = R[j][pivots_[k]];
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < R[j].size(); ++i) R[j][i] -= c * R[k][i];
      }
    std::vector<Vec> out;
    for (std::size_t k : order) out.push_back(R[k]);
    return out;
  }

 private:
  static int first_nonzero(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
  }
  void reduce(Vec& r, Vec& combo) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Cyclotomic c = r[pivots_[k]];
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (!rows_[k][i].is_zero()) r[i] -= c * rows_[k][i];
      for (std::size_t i = 0; i < combos_[k].size(); ++i)
        if (!combos_[k][i].is_zero()) combo[i] -= c * combos_[k][i];
    }
  }
  void reduce_only(Vec& r) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Cyclotomic c = r[pivots_[k]];
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (!rows_[k][i].is_zero()) r[i] -= c * rows_[k][i];
    }
  }

  int order_;
  int inserted_ = 0;
  std::vector<Vec> rows_;
  std::vector<Vec> combos_;
  std::vector<int> pivots_;
};

inline SpanSolver span_of(int order, const std::vector<Vec>& vs) {
  SpanSolver S(order);
  for (const auto& v : vs) S.insert(v);
  return S;
}

inline bool same_span(int order, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  SpanSolver A = span_of(order, a), B = span_of(order, b);
  if (A.rank() != B.rank()) return false;
  for (const auto& v : b)
    if (!A.contains(v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// H_lambda

/// lambda(b_1) b_2.
inline Vec lambda_projection(const HopfAlgebra& H, const Vec& lambda, const Vec& u) {
  Vec out = H.zero();
  for (int i = 0; i < H.dim; ++i) {
    if (u[i].is_zero()) continue;
    for (const auto& t : H.comult[i])
      if (!lambda[t.left].is_zero()) out[t.right] += u[i] * t.coeff * lambda[t.left];
  }
  return out;
}

struct SubalgebraBasis {
  std::string parent;  // name of the ambient algebra
  int order = 1;
  std::vector<Vec> basis;  // reduced row echelon
  int dim = 0;
  bool closed = false;

  bool contains(const Vec& v) const { return span_of(order, basis).contains(v); }
};

inline SubalgebraBasis span_subalgebra(const HopfAlgebra& H, const std::vector<Vec>& spanning) {
  SubalgebraBasis S;
  S.parent = H.name;
  S.order = H.order;
  SpanSolver sp = span_of(H.order, spanning);
  S.basis = sp.rref();
  S.dim = sp.rank();
  S.closed = sp.contains(H.unit);
  for (std::size_t i = 0; i < S.basis.size() && S.closed; ++i)
    for (std::size_t j = 0; j < S.basis.size() && S.closed; ++j)
      S.closed = sp.contains(H.multiply(S.basis[i], S.basis[j]));
  return S;
}

inline SubalgebraBasis compute_H_lambda(const HopfAlgebra& H, const Vec& lambda) {
  if (!is_partial_action(H, lambda)) throw NotAPartialAction(H.name + ": H_lambda asked of a non-partial action");
  std::vector<Vec> proj;
  for (int b = 0; b < H.dim; ++b) proj.push_back(lambda_projection(H, lambda, H.basis(b)));
  SubalgebraBasis S = span_subalgebra(H, proj);
  if (!S.closed) throw Error(H.name + ": H_lambda is not closed under multiplication");
  return S;
}

// ---------------------------------------------------------------------------
// Partial smash product with the base field

struct SmashAlgebra {
  int dim = 0;
  std::vector<std::string> labels;  // "1#[b]" for the projection of basis element b
  std::vector<Vec> elements;        // the projections, as elements of the vector space k#H = H
  std::vector<std::vector<Vec>> mult;  // coordinates of e_i e_j
  Vec unit;                            // coordinates of 1#1 * 1#1
};

/// Product (1#u)(1#v) = lambda(u_1) # u_2 v on k#H.
inline Vec smash_multiply(const HopfAlgebra& H, const Vec& lambda, const Vec& u, const Vec& v) {
  Vec out = H.zero();
  for (int i = 0; i < H.dim; ++i) {
    if (u[i].is_zero()) continue;
    for (const auto& t : H.comult[i]) {
      if (lambda[t.left].is_zero()) continue;
      Cyclotomic c = u[i] * t.coeff * lambda[t.left];
      for (int j = 0; j < H.dim; ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& e : H.mult_basis(t.right, j)) out[e.index] += c * v[j] * e.coeff;
      }
    }
  }
  return out;
}

inline SmashAlgebra smash_product(const HopfAlgebra& H, const Vec& lambda) {
  if (!is_partial_action(H, lambda)) throw NotAPartialAction(H.name + ": smash product asked of a non-partial action");
  SmashAlgebra A;
  SpanSolver sp(H.order);
  const Vec one = H.unit;
  for (int b = 0; b < H.dim; ++b) {
    Vec e = smash_multiply(H, lambda, H.basis(b), one);
    if (sp.insert(e)) {
      A.elements.push_back(e);
      A.labels.push_back("1#[" + H.labels[b] + "]");
    }
  }
  A.dim = sp.rank();
  A.mult.assign(A.dim, std::vector<Vec>(A.dim));
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      auto c = sp.coordinates(smash_multiply(H, lambda, A.elements[i], A.elements[j]));
      if (!c) throw Error(H.name + ": partial smash product is not closed");
      A.mult[i][j] = *c;
    }
  auto u = sp.coordinates(smash_multiply(H, lambda, one, one));
  if (!u) throw Error(H.name + ": projection of the unit is missing");
  A.unit = *u;
  return A;
}

/// phi(1#u) = u: the smash product lands on H_lambda with the same structure constants.
inline bool smash_matches_H_lambda(const HopfAlgebra& H, const SmashAlgebra& A, const SubalgebraBasis& S) {
  if (A.dim != S.dim) return false;
  SpanSolver sp = span_of(H.order, S.basis);
  for (const auto& e : A.elements)
    if (!sp.contains(e)) return false;
  auto combine = [&](const Vec& coords) {
    Vec v = H.zero();
    for (int k = 0; k < A.dim; ++k)
      if (!coords[k].is_zero())
        for (int i = 0; i < H.dim; ++i) v[i] += coords[k] * A.elements[k][i];
    return v;
  };
  if (combine(A.unit) != H.unit) return false;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      if (H.multiply(A.elements[i], A.elements[j]) != combine(A.mult[i][j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Criteria

struct CaracResult {
  bool holds = true;
  int witness = -1;  // basis element where the identity fails
  Vec lhs, rhs;
};

/// lambda(h_1) h_2 = lambda(h_1) h_2 lambda(h_3) on every basis element.
inline CaracResult check_carac(const HopfAlgebra& H, const Vec& lambda) {
  CaracResult r;
  for (int b = 0; b < H.dim; ++b) {
    Vec lhs = lambda_projection(H, lambda, H.basis(b));
    Vec rhs = H.zero();
    for (const auto& t : H.comult[b]) {
      if (lambda[t.left].is_zero()) continue;
      for (const auto& u : H.comult[t.right])
        if (!lambda[u.right].is_zero()) rhs[u.left] += t.coeff * u.coeff * lambda[t.left] * lambda[u.right];
    }
    if (lhs != rhs) {
      r.holds = false;
      r.witness = b;
      r.lhs = lhs;
      r.rhs = rhs;
      return r;
    }
  }
  return r;
}

/// lambda(h_1) h_2 = h_1 lambda(h_2) on every basis element.
inline CaracResult check_strong(const HopfAlgebra& H, const Vec& lambda) {
  CaracResult r;
  for (int b = 0; b < H.dim; ++b) {
    Vec lhs = H.zero(), rhs = H.zero();
    for (const auto& t : H.comult[b]) {
      lhs[t.right] += t.coeff * lambda[t.left];
      rhs[t.left] += t.coeff * lambda[t.right];
    }
    if (lhs != rhs) {
      r.holds = false;
      r.witness = b;
      r.lhs = lhs;
      r.rhs = rhs;
      return r;
    }
  }
  return r;
}

/// Delta(S) inside S (x) S: every row and every column of each Delta(s),
/// read as a dim x dim matrix, lies in S.
inline bool check_coproduct_closure(const HopfAlgebra& H, const SubalgebraBasis& S) {
  SpanSolver sp = span_of(H.order, S.basis);
  for (const auto& s : S.basis) {
    Tensor2 d = H.comultiply(s);
    std::map<int, Vec> rows, cols;
    for (const auto& [ij, c] : d) {
      auto& r = rows.try_emplace(ij.first, H.zero()).first->second;
      r[ij.second] += c;
      auto& k = cols.try_emplace(ij.second, H.zero()).first->second;
      k[ij.first] += c;
    }
    for (const auto& [i, v] : rows)
      if (!sp.contains(v)) return false;
    for (const auto& [i, v] : cols)
      if (!sp.contains(v)) return false;
  }
  return true;
}

/// lambda and the counit agree on S.
inline bool check_restriction_lemma(const HopfAlgebra& H, const Vec& lambda, const SubalgebraBasis& S) {
  for (const auto& s : S.basis)
    if (apply_functional(lambda, s) != H.apply_counit(s)) return false;
  return true;
}

struct CorollaryReport {
  bool applies = false;        // some basis x in P_{g,h} with lambda(g) != lambda(h)
  bool one_zero = false;       // (lambda(g), lambda(h)) = (1, 0) occurs
  bool zero_one = false;       // (0, 1) occurs
  bool carac = true;
  bool consistent = true;      // applies => carac false
  int witness = -1;
};

inline CorollaryReport check_skew_corollaries(const HopfAlgebra& H, const Vec& lambda) {
  CorollaryReport r;
  for (const auto& sp : skew_primitives(H)) {
    const Cyclotomic &lg = lambda[sp.t], &lh = lambda[sp.s];
    if (lg == lh) continue;
    if (!r.applies) r.witness = sp.x;
    r.applies = true;
    if (lg.is_one() && lh.is_zero()) r.one_zero = true;
    if (lg.is_zero() && lh.is_one()) r.zero_one = true;
  }
  r.carac = check_carac(H, lambda).holds;
  r.consistent = !r.applies || !r.carac;
  return r;
}

// ---------------------------------------------------------------------------
// Morphisms

struct MorphismReport {
  std::vector<Vec> images;  // image of every source basis element
  int rank = 0;
  bool injective = false;
  bool bijective = false;
};

inline std::map<std::string, Vec> parse_images(const HopfAlgebra& target, const std::map<std::string, std::string>& text) {
  std::map<std::string, Vec> out;
  for (const auto& [sym, s] : text) out[sym] = parse_element(target, s);
  return out;
}

/// Extends generator images multiplicatively along the source basis words and
/// checks unit, multiplication, comultiplication and counit. Throws
/// NotAMorphism naming the failing law.
inline MorphismReport verify_hopf_morphism(const HopfAlgebra& source0, const HopfAlgebra& target0,
                                           const std::map<std::string, Vec>& gen_images) {
  const int M = std::lcm(source0.order, target0.order);
  HopfAlgebra S = source0.embedded(M), T = target0.embedded(M);
  if (S.basis_words.size() != static_cast<std::size_t>(S.dim))
    throw NotAMorphism(S.name + " has no basis words in its generators");
  std::vector<Vec> gimg;
  for (const auto& [sym, v] : S.generators) {
    auto it = gen_images.find(sym);
    if (it == gen_images.end()) throw NotAMorphism("no image for generator " + sym + " of " + S.name);
    Vec w;
    for (const auto& c : it->second) w.push_back(embed(c, M));
    if (static_cast<int>(w.size()) != T.dim) throw NotAMorphism("image of " + sym + " has the wrong size");
    gimg.push_back(w);
  }
  MorphismReport r;
  for (int b = 0; b < S.dim; ++b) {
    Vec v = T.unit;
    for (int k : S.basis_words[b]) v = T.multiply(v, gimg[k]);
    // the word product equals b itself in S; rescale if the normal form carries a scalar
    Vec w = S.unit;
    for (int k : S.basis_words[b]) w = S.multiply(w, S.generators[k].second);
    const Cyclotomic& c = w[b];
    for (int i = 0; i < S.dim; ++i)
      if (i != b && !w[i].is_zero()) throw NotAMorphism(S.name + ": basis word of " + S.labels[b] + " is not a monomial");
    for (auto& x : v) x /= c;
    r.images.push_back(v);
  }
  auto image = [&](const Vec& u) {
    Vec out = T.zero();
    for (int i = 0; i < S.dim; ++i)
      if (!u[i].is_zero())
        for (int k = 0; k < T.dim; ++k) out[k] += u[i] * r.images[i][k];
    return out;
  };
  if (image(S.unit) != T.unit) throw NotAMorphism("unit is not preserved");
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j)
      if (image(S.from_sparse(S.mult_basis(i, j))) != T.multiply(r.images[i], r.images[j]))
        throw NotAMorphism("multiplication fails at " + S.labels[i] + "*" + S.labels[j]);
  for (int i = 0; i < S.dim; ++i) {
    Tensor2 mapped;
    for (const auto& t : S.comult[i])
      for (int a = 0; a < T.dim; ++a) {
        if (r.images[t.left][a].is_zero()) continue;
        for (int b = 0; b < T.dim; ++b)
          if (!r.images[t.right][b].is_zero())
            accumulate(mapped, a, b, t.coeff * r.images[t.left][a] * r.images[t.right][b]);
      }
    if (mapped != T.comultiply(r.images[i])) throw NotAMorphism("comultiplication fails at " + S.labels[i]);
    if (T.apply_counit(r.images[i]) != S.counit[i]) throw NotAMorphism("counit fails at " + S.labels[i]);
  }
  r.rank = span_of(M, r.images).rank();
  r.injective = r.rank == S.dim;
  r.bijective = r.injective && S.dim == T.dim;
  return r;
}

inline bool is_hopf_morphism(const HopfAlgebra& source, const HopfAlgebra& target,
                             const std::map<std::string, Vec>& gen_images) {
  try {
    verify_hopf_morphism(source, target, gen_images);
    return true;
  } catch (const NotAMorphism&) {
    return false;
  }
}

/// Images span exactly S.
inline bool image_is(const MorphismReport& m, const SubalgebraBasis& S) {
  if (!m.injective || static_cast<int>(m.images.size()) != S.dim) return false;
  return same_span(S.order, m.images, S.basis);
}

// ---------------------------------------------------------------------------
// Constructions

/// (lambda_H (x) lambda_L)(h (x) l) = lambda_H(h) lambda_L(l), on tensor_hopf(H, L).
inline Vec tensor_partial_action(const HopfAlgebra& H, const Vec& lH, const HopfAlgebra& L, const Vec& lL) {
  if (!is_partial_action(H, lH)) throw NotAPartialAction(H.name + ": left factor");
  if (!is_partial_action(L, lL)) throw NotAPartialAction(L.name + ": right factor");
  const int M = std::lcm(H.order, L.order);
  Vec out;
  for (int i = 0; i < H.dim; ++i)
    for (int j = 0; j < L.dim; ++j) out.push_back(embed(lH[i], M) * embed(lL[j], M));
  return out;
}

struct WitnessConstruction {
  HopfAlgebra L;
  Vec lambda;
  SubalgebraBasis H_lambda;
  bool carac = false;
  MorphismReport morphism;
  bool image_matches = false;
};

/// L = H (x) kG with lambda = counit (x) lambda_{1}; h -> h (x) 1 maps H onto L_lambda.
inline WitnessConstruction lambda_hopf_witness_construction(const HopfAlgebra& H, const FiniteGroup& G) {
  if (G.order() < 2) throw Error("witness construction needs a nontrivial group");
  WitnessConstruction w;
  HopfAlgebra kG = group_algebra(G, "kG");
  w.L = tensor_hopf(H, kG, H.name + "(x)kG");
  HopfAlgebra He = H.embedded(w.L.order), kGe = kG.embedded(w.L.order);
  w.lambda = tensor_partial_action(He, He.counit, kGe, lambda_N(kGe, G, Subgroup{{G.identity()}}));
  w.H_lambda = compute_H_lambda(w.L, w.lambda);
  w.carac = check_carac(w.L, w.lambda).holds;
  std::map<std::string, Vec> images;
  for (std::size_t k = 0; k < H.generators.size(); ++k) images[H.generators[k].first] = w.L.generators[k].second;
  w.morphism = verify_hopf_morphism(H, w.L, images);
  w.image_matches = image_is(w.morphism, w.H_lambda);
  return w;
}

struct TaftWitness {
  int n = 0, k = 0;
  HopfAlgebra T, target;
  Vec lambda;
  int dim = 0;
  bool carac = false;
  bool closure = false;
  MorphismReport morphism;
  bool image_matches = false;
};

/// (T_n^k(omega))_lambda with N = <g^k>, identified with T_n(omega^k) by
/// h -> g^k, y -> x (the Sweedler algebra when n = 2).
inline TaftWitness taft_lambda_hopf(int n, int k) {
  TaftWitness w;
  w.n = n;
  w.k = k;
  w.T = taft_algebra(n, k);
  w.lambda = taft_lambda(w.T, k);
  SubalgebraBasis S = compute_H_lambda(w.T, w.lambda);
  w.dim = S.dim;
  w.carac = check_carac(w.T, w.lambda).holds;
  w.closure = check_coproduct_closure(w.T, S);
  const Cyclotomic wk = w.T.constants.at("omega").pow(k);
  w.target = n == 2 ? get_algebra("Sweedler")
                    : taft_algebra(n, 1, wk, w.T.order, "T" + std::to_string(n) + "(omega^" + std::to_string(k) + ")");
  std::map<std::string, Vec> images = {{"g", parse_element(w.T, "g^" + std::to_string(k))},
                                       {"x", parse_element(w.T, "x")}};
  w.morphism = verify_hopf_morphism(w.target, w.T, images);
  w.image_matches = image_is(w.morphism, S);
  return w;
}

// ---------------------------------------------------------------------------
// Reports

struct SmashReport {
  std::string algebra;
  std::vector<std::string> subgroup;
  Vec lambda;
  int dim = 0;
  std::vector<Vec> basis;
  CaracResult carac;
  bool strong = false;
  bool closure = false;
  bool restriction = false;
  bool smash_agrees = false;
  CorollaryReport corollary;
  std::optional<std::string> target;
  bool target_verified = false;
};

inline SmashReport smash_report(const HopfAlgebra& H, const Vec& lambda) {
  SmashReport r;
  r.algebra = H.name;
  r.lambda = lambda;
  GroupLikeSet GL = group_likes(H);
  for (int g = 0; g < GL.group.order(); ++g)
    if (lambda[GL.elements[g]].is_one()) r.subgroup.push_back(GL.group.label(g));
  SubalgebraBasis S = compute_H_lambda(H, lambda);
  r.dim = S.dim;
  r.basis = S.basis;
  r.carac = check_carac(H, lambda);
  r.strong = check_strong(H, lambda).holds;
  r.closure = check_coproduct_closure(H, S);
  r.restriction = check_restriction_lemma(H, lambda, S);
  r.smash_agrees = smash_matches_H_lambda(H, smash_product(H, lambda), S);
  r.corollary = check_skew_corollaries(H, lambda);
  return r;
}

struct EdgeReport {
  DiagramEdge edge;
  int dim = 0;
  bool carac = false;
  bool closure = false;
  bool morphism_ok = false;
  bool injective = false;
  bool image_matches = false;
  std::string failure;
  bool ok() const { return carac && closure && morphism_ok && injective && image_matches; }
};

/// The tabulated row of the source for the edge's subgroup, at its sample
/// point; the target maps injectively onto H_lambda.
inline EdgeReport verify_edge(const DiagramEdge& e, const std::string& dir = data_dir()) {
  EdgeReport r;
  r.edge = e;
  try {
    HopfAlgebra H = get_algebra(e.source);
    HopfAlgebra T = get_algebra(e.target);
    GroupLikeSet GL = group_likes(H);
    Table t = load_table(e.source, dir);
    TableRow probe;
    probe.algebra = e.source;
    probe.subgroup = e.subgroup;
    Subgroup N = row_subgroup(GL, probe);
    std::optional<Vec> lam;
    for (const auto& row : t.rows) {
      ParsedRow P = parse_row(H, GL, t, row);
      if (P.N == N) lam = row_sample(H, P, row);
    }
    if (!lam) throw UnknownName("no table row of " + e.source + " for " + N.str(GL.group));
    SubalgebraBasis S = compute_H_lambda(H, *lam);
    r.dim = S.dim;
    r.carac = check_carac(H, *lam).holds;
    r.closure = check_coproduct_closure(H, S);
    MorphismReport m = verify_hopf_morphism(T, H, parse_images(H, e.images));
    r.morphism_ok = true;
    r.injective = m.injective;
    r.image_matches = image_is(m, S);
  } catch (const Error& ex) {
    r.failure = ex.what();
  }
  return r;
}

}  // namespace hopf
