#pragma once
// Finite-dimensional Hopf algebras as structure constants, built from
// pointed presentations by normal-form rewriting.

#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopf/error.hpp"
#include "hopf/exactfield.hpp"
#include "hopf/groups.hpp"

namespace hopf {

using Vec = std::vector<Cyclotomic>;

struct Entry {
  int index;
  Cyclotomic coeff;
};
using Sparse = std::vector<Entry>;

struct TensorTerm {
  Cyclotomic coeff;
  int left, right;
};

/// Sparse element of H (x) H.
using Tensor2 = std::map<std::pair<int, int>, Cyclotomic>;

inline void accumulate(Tensor2& t, int i, int j, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = t.find({i, j});
  if (it == t.end()) {
    t.emplace(std::make_pair(i, j), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

class HopfAlgebra {
 public:
  std::string name;
  int dim = 0;
  int order = 1;
  std::vector<std::string> labels;
  std::vector<Sparse> mult;  // mult[i*dim + j] = b_i b_j
  Vec unit;
  std::vector<std::vector<TensorTerm>> comult;
  Vec counit;
  std::vector<Sparse> antipode;

  // Algebra generators (symbol, element) and, per basis element, a word in
  // them (indices into `generators`) whose product is that basis element.
  std::vector<std::pair<std::string, Vec>> generators;
  std::vector<std::vector<int>> basis_words;
  std::map<std::string, Cyclotomic> constants;

  Vec zero() const { return Vec(dim, Cyclotomic::zero(order)); }
  Vec basis(int i) const {
    Vec v = zero();
    v.at(i) = Cyclotomic::one(order);
    return v;
  }
  Cyclotomic scalar(const Rational& q) const { return Cyclotomic(order, q); }

  int index_of(const std::string& label) const {
    for (int i = 0; i < dim; ++i)
      if (labels[i] == label) return i;
    return -1;
  }
  int require_index(const std::string& label) const {
    int i = index_of(label);
    if (i < 0) throw UnknownName("no basis element '" + label + "' in " + name);
    return i;
  }

  const Sparse& mult_basis(int i, int j) const { return mult[static_cast<std::size_t>(i) * dim + j]; }

  Vec multiply(const Vec& u, const Vec& v) const {
    Vec r = zero();
    for (int i = 0; i < dim; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (v[j].is_zero()) continue;
        Cyclotomic c = u[i] * v[j];
        for (const auto& e : mult_basis(i, j)) r[e.index] += c * e.coeff;
      }
    }
    return r;
  }

  Tensor2 comultiply(const Vec& u) const {
    Tensor2 t;
    for (int i = 0; i < dim; ++i) {
      if (u[i].is_zero()) continue;
      for (const auto& tt : comult[i]) accumulate(t, tt.left, tt.right, u[i] * tt.coeff);
    }
    return t;
  }

  Cyclotomic apply_counit(const Vec& u) const {
    Cyclotomic r = Cyclotomic::zero(order);
    for (int i = 0; i < dim; ++i)
      if (!u[i].is_zero()) r += u[i] * counit[i];
    return r;
  }

  Vec apply_antipode(const Vec& u) const {
    Vec r = zero();
    for (int i = 0; i < dim; ++i) {
      if (u[i].is_zero()) continue;
      for (const auto& e : antipode[i]) r[e.index] += u[i] * e.coeff;
    }
    return r;
  }

  Tensor2 tensor_multiply(const Tensor2& a, const Tensor2& b) const {
    Tensor2 r;
    for (const auto& [ij, c1] : a)
      for (const auto& [kl, c2] : b) {
        const Sparse& left = mult_basis(ij.first, kl.first);
        if (left.empty()) continue;
        const Sparse& right = mult_basis(ij.second, kl.second);
        Cyclotomic c = c1 * c2;
        for (const auto& e1 : left)
          for (const auto& e2 : right) accumulate(r, e1.index, e2.index, c * e1.coeff * e2.coeff);
      }
    return r;
  }

  Vec from_sparse(const Sparse& s) const {
    Vec v = zero();
    for (const auto& e : s) v[e.index] += e.coeff;
    return v;
  }

  std::string format(const Vec& v) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim; ++i) {
      if (v[i].is_zero()) continue;
      const Cyclotomic& c = v[i];
      bool neg = c.is_rational() && c.rational_part() < 0;
      Cyclotomic mag = neg ? -c : c;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (!mag.is_one()) {
        std::string s = mag.str();
        if (!mag.is_rational()) s = "(" + s + ")";
        os << s << "*";
      }
      os << labels[i];
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

  std::string format(const Tensor2& t) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : t) {
      os << (first ? "" : " + ");
      if (!c.is_one()) os << "(" << c.str() << ")*";
      os << labels[ij.first] << "(x)" << labels[ij.second];
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

  /// All structure constants carried into Q(zeta_M).
  HopfAlgebra embedded(int M) const {
    if (M == order) return *this;
    HopfAlgebra H = *this;
    H.order = M;
    auto conv = [&](Cyclotomic& c) { c = embed(c, M); };
    for (auto& s : H.mult)
      for (auto& e : s) conv(e.coeff);
    for (auto& c : H.unit) conv(c);
    for (auto& v : H.comult)
      for (auto& t : v) conv(t.coeff);
    for (auto& c : H.counit) conv(c);
    for (auto& s : H.antipode)
      for (auto& e : s) conv(e.coeff);
    for (auto& g : H.generators)
      for (auto& c : g.second) conv(c);
    for (auto& [k, c] : H.constants) conv(c);
    return H;
  }
};

// ---------------------------------------------------------------------------
// Axioms

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(const std::string& law, const std::string& where) {
    ok = false;
    if (failures.size() < 20) failures.push_back(law + " fails at " + where);
  }
};

inline AxiomReport check_hopf_axioms(const HopfAlgebra& H) {
  AxiomReport rep;
  const int n = H.dim;
  std::vector<Vec> B;
  for (int i = 0; i < n; ++i) B.push_back(H.basis(i));
  // associativity and unit
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Sparse& ij = H.mult_basis(i, j);
      for (int k = 0; k < n; ++k) {
        std::map<int, Cyclotomic> left, right;
        auto add = [](std::map<int, Cyclotomic>& acc, int idx, const Cyclotomic& c) {
          auto it = acc.find(idx);
          if (it == acc.end())
            acc.emplace(idx, c);
          else
            it->second += c;
        };
        for (const auto& e : ij)
          for (const auto& f : H.mult_basis(e.index, k)) add(left, f.index, e.coeff * f.coeff);
        for (const auto& e : H.mult_basis(j, k))
          for (const auto& f : H.mult_basis(i, e.index)) add(right, f.index, e.coeff * f.coeff);
        std::erase_if(left, [](const auto& kv) { return kv.second.is_zero(); });
        std::erase_if(right, [](const auto& kv) { return kv.second.is_zero(); });
        if (left != right) rep.fail("associativity", H.labels[i] + "," + H.labels[j] + "," + H.labels[k]);
      }
    }
  for (int i = 0; i < n; ++i)
    if (H.multiply(H.unit, B[i]) != B[i] || H.multiply(B[i], H.unit) != B[i]) rep.fail("unit", H.labels[i]);
  // coassociativity and counit
  for (int i = 0; i < n; ++i) {
    std::map<std::tuple<int, int, int>, Cyclotomic> left, right;
    auto add3 = [](auto& m, int a, int b, int c, const Cyclotomic& v) {
      if (v.is_zero()) return;
      auto key = std::make_tuple(a, b, c);
      auto it = m.find(key);
      if (it == m.end())
        m.emplace(key, v);
      else {
        it->second += v;
        if (it->second.is_zero()) m.erase(it);
      }
    };
    for (const auto& t : H.comult[i]) {
      for (const auto& u : H.comult[t.left]) add3(left, u.left, u.right, t.right, t.coeff * u.coeff);
      for (const auto& u : H.comult[t.right]) add3(right, t.left, u.left, u.right, t.coeff * u.coeff);
    }
    if (left != right) rep.fail("coassociativity", H.labels[i]);
    Vec l = H.zero(), r = H.zero();
    for (const auto& t : H.comult[i]) {
      l[t.right] += t.coeff * H.counit[t.left];
      r[t.left] += t.coeff * H.counit[t.right];
    }
    if (l != B[i] || r != B[i]) rep.fail("counit", H.labels[i]);
  }
  // bialgebra
  Tensor2 one_one;
  {
    Tensor2 du = H.comultiply(H.unit);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) accumulate(one_one, i, j, H.unit[i] * H.unit[j]);
    if (du != one_one) rep.fail("comultiplication of unit", "1");
    if (!H.apply_counit(H.unit).is_one()) rep.fail("counit of unit", "1");
  }
  std::vector<Tensor2> D;
  for (int i = 0; i < n; ++i) D.push_back(H.comultiply(B[i]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec p = H.from_sparse(H.mult_basis(i, j));
      if (H.comultiply(p) != H.tensor_multiply(D[i], D[j]))
        rep.fail("comultiplication is multiplicative", H.labels[i] + "," + H.labels[j]);
      if (H.apply_counit(p) != H.counit[i] * H.counit[j])
        rep.fail("counit is multiplicative", H.labels[i] + "," + H.labels[j]);
    }
  // antipode
  for (int i = 0; i < n; ++i) {
    Vec l = H.zero(), r = H.zero();
    for (const auto& t : H.comult[i]) {
      Vec sl = H.from_sparse(H.antipode[t.left]);
      Vec sr = H.from_sparse(H.antipode[t.right]);
      Vec a = H.multiply(sl, B[t.right]);
      Vec b = H.multiply(B[t.left], sr);
      for (int k = 0; k < n; ++k) {
        l[k] += t.coeff * a[k];
        r[k] += t.coeff * b[k];
      }
    }
    Vec expect = H.unit;
    for (auto& c : expect) c *= H.counit[i];
    if (l != expect || r != expect) rep.fail("antipode", H.labels[i]);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Group-likes and skew-primitives

struct GroupLikeSet {
  std::vector<int> elements;  // basis indices; group element k is basis element elements[k]
  FiniteGroup group;

  int group_index(int basis) const {
    for (std::size_t k = 0; k < elements.size(); ++k)
      if (elements[k] == basis) return static_cast<int>(k);
    return -1;
  }
  bool contains(int basis) const { return group_index(basis) >= 0; }
};

inline bool is_group_like_basis(const HopfAlgebra& H, int i) {
  const auto& d = H.comult[i];
  return d.size() == 1 && d[0].left == i && d[0].right == i && d[0].coeff.is_one() && H.counit[i].is_one();
}

/// Basis elements g with Delta(g) = g (x) g and eps(g) = 1, as a group.
inline GroupLikeSet group_likes(const HopfAlgebra& H) {
  GroupLikeSet S;
  for (int i = 0; i < H.dim; ++i)
    if (is_group_like_basis(H, i)) S.elements.push_back(i);
  const int n = static_cast<int>(S.elements.size());
  if (n == 0) throw NotClosed(H.name + ": no basis element is group-like");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Sparse& p = H.mult_basis(S.elements[a], S.elements[b]);
      if (p.size() != 1 || !p[0].coeff.is_one() || S.group_index(p[0].index) < 0)
        throw NotClosed(H.name + ": product of group-like basis elements " + H.labels[S.elements[a]] + " and " +
                        H.labels[S.elements[b]] + " leaves the set");
      table[a][b] = S.group_index(p[0].index);
    }
  std::vector<std::string> labels;
  for (int e : S.elements) labels.push_back(H.labels[e]);
  try {
    S.group = FiniteGroup(table, labels);
  } catch (const Error& e) {
    throw NotClosed(H.name + ": group-like basis elements do not form a group (" + e.what() + ")");
  }
  if (H.unit != H.basis(S.elements[S.group.identity()]))
    throw NotClosed(H.name + ": identity of the group-likes is not the unit");
  // reuse generator symbols that are group-like
  std::vector<std::pair<std::string, int>> gens;
  for (const auto& [sym, v] : H.generators)
    for (int k = 0; k < n; ++k)
      if (v == H.basis(S.elements[k])) gens.push_back({sym, k});
  S.group.set_generators(gens);
  return S;
}

struct SkewPrimitive {
  int x, t, s;  // Delta(x) = x (x) t + s (x) x, i.e. x in P_{t,s}; t, s basis indices
};

inline std::vector<SkewPrimitive> skew_primitives(const HopfAlgebra& H) {
  std::vector<SkewPrimitive> out;
  for (int i = 0; i < H.dim; ++i) {
    if (is_group_like_basis(H, i)) continue;
    const auto& d = H.comult[i];
    if (d.size() != 2) continue;
    int t = -1, s = -1;
    for (const auto& tt : d) {
      if (!tt.coeff.is_one()) continue;
      if (tt.left == i && is_group_like_basis(H, tt.right) && t < 0)
        t = tt.right;
      else if (tt.right == i && is_group_like_basis(H, tt.left))
        s = tt.left;
    }
    if (t >= 0 && s >= 0) out.push_back({i, t, s});
  }
  return out;
}

/// Gaussian binomial (j choose l)_q by the q-Pascal rule.
inline Cyclotomic qbinomial(int j, int l, const Cyclotomic& q) {
  if (l < 0 || l > j) return Cyclotomic::zero(q.order());
  std::vector<std::vector<Cyclotomic>> T(j + 1);
  for (int a = 0; a <= j; ++a) {
    T[a].assign(a + 1, Cyclotomic::one(q.order()));
    for (int b = 1; b < a; ++b) T[a][b] = T[a - 1][b - 1] + q.pow(b) * T[a - 1][b];
  }
  return T[j][l];
}

// ---------------------------------------------------------------------------
// Pointed presentations

struct SkewGenerator {
  std::string name;
  int right_group = 0;  // a in Delta(x) = x (x) a + b (x) x
  int left_group = 0;   // b
  Vec chi;              // x g = chi[g] g x, indexed by group element
  int power = 2;        // x^power = power_rhs
  Vec power_rhs;        // element of kG indexed by group element (empty means 0)
};

struct CrossRelation {
  int upper, lower;  // x_upper x_lower = q x_lower x_upper + c, upper > lower
  Cyclotomic q;
  Vec c;  // element of kG (empty means 0)
};

struct PointedPresentation {
  std::string name;
  int field_order = 4;
  FiniteGroup group;
  std::vector<SkewGenerator> skew;
  std::vector<CrossRelation> cross;
  std::map<std::string, Cyclotomic> constants;
  int expected_dim = 0;  // 0: not declared
};

/// Character values from values on the group generators; rejects
/// assignments that are not homomorphisms.
inline Vec character_from_generators(const FiniteGroup& G, int field_order, const std::map<int, Cyclotomic>& on_gens) {
  std::vector<std::optional<Cyclotomic>> chi(G.order());
  chi[G.identity()] = Cyclotomic::one(field_order);
  std::vector<int> frontier = {G.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (const auto& [g, v] : on_gens) {
        int b = G.mul(a, g);
        Cyclotomic val = *chi[a] * embed(v, field_order);
        if (!chi[b]) {
          chi[b] = val;
          next.push_back(b);
        } else if (*chi[b] != val) {
          throw NonConfluentPresentation("commutation scalars do not define a character of the group");
        }
      }
    frontier = next;
  }
  Vec out;
  for (int a = 0; a < G.order(); ++a) {
    if (!chi[a]) throw NonConfluentPresentation("commutation character undefined on " + G.label(a));
    out.push_back(*chi[a]);
  }
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      if (out[G.mul(a, b)] != out[a] * out[b])
        throw NonConfluentPresentation("commutation scalars do not define a character of the group");
  return out;
}

namespace detail {

// Shortest words in the group generators, by BFS.
inline std::vector<std::vector<int>> group_words(const FiniteGroup& G) {
  std::vector<std::optional<std::vector<int>>> w(G.order());
  w[G.identity()] = std::vector<int>{};
  std::vector<int> frontier = {G.identity()};
  const auto& gens = G.generators();
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int b = G.mul(a, gens[k].second);
        if (w[b]) continue;
        auto word = *w[a];
        word.push_back(static_cast<int>(k));
        w[b] = word;
        next.push_back(b);
      }
    frontier = next;
  }
  std::vector<std::vector<int>> out;
  for (int a = 0; a < G.order(); ++a) {
    if (!w[a]) throw Error("group generators do not generate " + G.label(a));
    out.push_back(*w[a]);
  }
  return out;
}

inline std::string word_label(const std::vector<std::string>& names, const std::vector<int>& e) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!e[k]) continue;
    s += names[k];
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

inline std::string join_label(const std::string& g, const std::string& w) {
  if (w.empty()) return g;
  if (g == "1") return w;
  return g + w;
}

}  // namespace detail

inline HopfAlgebra build_hopf(const PointedPresentation& P) {
  const FiniteGroup& G = P.group;
  const int m = P.field_order;
  const int ng = G.order();
  const int r = static_cast<int>(P.skew.size());
  for (const auto& x : P.skew) {
    if (x.power < 2) throw NonConfluentPresentation("nilpotency/power index of " + x.name + " must be at least 2");
    if (static_cast<int>(x.chi.size()) != ng) throw NonConfluentPresentation("character of " + x.name + " has wrong size");
  }

  // exponent vectors, ordered by total degree then descending lex
  std::vector<std::vector<int>> words;
  {
    std::vector<int> e(r, 0);
    std::function<void(int)> rec = [&](int k) {
      if (k == r) {
        words.push_back(e);
        return;
      }
      for (int v = 0; v < P.skew[k].power; ++v) {
        e[k] = v;
        rec(k + 1);
      }
      e[k] = 0;
    };
    rec(0);
    std::stable_sort(words.begin(), words.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
      int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
      if (da != db) return da < db;
      return a > b;
    });
  }
  std::map<std::vector<int>, int> word_index;
  for (std::size_t k = 0; k < words.size(); ++k) word_index[words[k]] = static_cast<int>(k);
  const int dim = ng * static_cast<int>(words.size());
  if (P.expected_dim && P.expected_dim != dim)
    throw DimensionMismatch(P.name + ": normal-form basis has " + std::to_string(dim) + " elements, declared " +
                            std::to_string(P.expected_dim));
  auto basis_index = [&](int g, const std::vector<int>& e) { return word_index.at(e) * ng + g; };

  std::map<std::pair<int, int>, const CrossRelation*> cross;
  for (const auto& c : P.cross) {
    if (c.upper <= c.lower) throw NonConfluentPresentation("cross relation must rewrite x_j x_i with j > i");
    cross[{c.upper, c.lower}] = &c;
  }
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < j; ++i)
      if (!cross.count({j, i}))
        throw NonConfluentPresentation("missing relation between " + P.skew[j].name + " and " + P.skew[i].name);

  auto embedv = [&](const Vec& v) {
    Vec out;
    for (const auto& c : v) out.push_back(embed(c, m));
    return out;
  };
  std::vector<Vec> chi, prhs;
  for (const auto& x : P.skew) {
    chi.push_back(embedv(x.chi));
    prhs.push_back(embedv(x.power_rhs));
  }

  // rewriting of g * x_{w_1} ... x_{w_n}
  struct WTerm {
    Cyclotomic c;
    int g;
    std::vector<int> w;
  };
  const long step_cap = 2000000;
  auto normalize = [&](std::vector<WTerm> stack) {
    std::map<int, Cyclotomic> out;
    long steps = 0;
    auto move_left = [&](const std::vector<int>& prefix, int h) {
      Cyclotomic s = Cyclotomic::one(m);
      for (int k : prefix) s *= chi[k][h];
      return s;
    };
    while (!stack.empty()) {
      WTerm t = std::move(stack.back());
      stack.pop_back();
      if (t.c.is_zero()) continue;
      if (++steps > step_cap) throw NonConfluentPresentation(P.name + ": rewriting does not terminate");
      const int n = static_cast<int>(t.w.size());
      int p = -1;
      for (int k = 0; k + 1 < n; ++k)
        if (t.w[k] > t.w[k + 1]) {
          p = k;
          break;
        }
      if (p >= 0) {
        const CrossRelation* rel = cross.at({t.w[p], t.w[p + 1]});
        std::vector<int> swapped = t.w;
        std::swap(swapped[p], swapped[p + 1]);
        stack.push_back({t.c * embed(rel->q, m), t.g, swapped});
        std::vector<int> prefix(t.w.begin(), t.w.begin() + p);
        for (int h = 0; h < static_cast<int>(rel->c.size()); ++h) {
          if (rel->c[h].is_zero()) continue;
          std::vector<int> rest = prefix;
          rest.insert(rest.end(), t.w.begin() + p + 2, t.w.end());
          stack.push_back({t.c * embed(rel->c[h], m) * move_left(prefix, h), G.mul(t.g, h), rest});
        }
        continue;
      }
      bool reduced = false;
      for (int k = 0; k < n && !reduced; ++k) {
        int len = 1;
        while (k + len < n && t.w[k + len] == t.w[k]) ++len;
        const int gen = t.w[k];
        if (len >= P.skew[gen].power) {
          std::vector<int> prefix(t.w.begin(), t.w.begin() + k);
          for (int h = 0; h < static_cast<int>(prhs[gen].size()); ++h) {
            if (prhs[gen][h].is_zero()) continue;
            std::vector<int> rest = prefix;
            rest.insert(rest.end(), t.w.begin() + k + P.skew[gen].power, t.w.end());
            stack.push_back({t.c * prhs[gen][h] * move_left(prefix, h), G.mul(t.g, h), rest});
          }
          reduced = true;
        }
        k += len - 1;
      }
      if (reduced) continue;
      std::vector<int> e(r, 0);
      for (int k : t.w) e[k]++;
      int idx = basis_index(t.g, e);
      auto it = out.find(idx);
      if (it == out.end())
        out.emplace(idx, t.c);
      else
        it->second += t.c;
    }
    Sparse s;
    for (auto& [i, c] : out)
      if (!c.is_zero()) s.push_back({i, c});
    return s;
  };

  HopfAlgebra H;
  H.name = P.name;
  H.dim = dim;
  H.order = m;
  H.constants = P.constants;
  for (auto& [k, c] : H.constants) c = embed(c, m);
  std::vector<std::string> skew_names;
  for (const auto& x : P.skew) skew_names.push_back(x.name);
  std::vector<std::vector<int>> letters(dim);  // basis -> skew letters in order
  std::vector<int> group_of(dim);
  for (std::size_t k = 0; k < words.size(); ++k)
    for (int g = 0; g < ng; ++g) {
      int idx = static_cast<int>(k) * ng + g;
      H.labels.push_back(detail::join_label(G.label(g), detail::word_label(skew_names, words[k])));
      group_of[idx] = g;
      for (int v = 0; v < r; ++v)
        for (int c = 0; c < words[k][v]; ++c) letters[idx].push_back(v);
    }

  H.mult.resize(static_cast<std::size_t>(dim) * dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const int g2 = group_of[b];
      Cyclotomic c = Cyclotomic::one(m);
      for (int k : letters[a]) c *= chi[k][g2];
      std::vector<int> w = letters[a];
      w.insert(w.end(), letters[b].begin(), letters[b].end());
      H.mult[static_cast<std::size_t>(a) * dim + b] = normalize({{c, G.mul(group_of[a], g2), w}});
    }
  H.unit = H.basis(G.identity());


  // coproduct: (g (x) g) prod Delta(x_k)
  auto x_index = [&](int k) {
    std::vector<int> e(r, 0);
    e[k] = 1;
    return basis_index(G.identity(), e);
  };
  std::vector<Tensor2> dx(r);
  for (int k = 0; k < r; ++k) {
    accumulate(dx[k], x_index(k), P.skew[k].right_group, Cyclotomic::one(m));
    accumulate(dx[k], P.skew[k].left_group, x_index(k), Cyclotomic::one(m));
  }
  H.comult.resize(dim);
  H.counit.assign(dim, Cyclotomic::zero(m));
  for (int a = 0; a < dim; ++a) {
    Tensor2 t;
    accumulate(t, group_of[a], group_of[a], Cyclotomic::one(m));
    for (int k : letters[a]) t = H.tensor_multiply(t, dx[k]);
    for (auto& [ij, c] : t) H.comult[a].push_back({c, ij.first, ij.second});
    if (letters[a].empty()) H.counit[a] = Cyclotomic::one(m);
  }
  // antipode: S(g) = g^-1, S(x) = -b^-1 x a^-1, anti-multiplicative
  std::vector<Vec> sx(r);
  for (int k = 0; k < r; ++k) {
    Vec v = H.multiply(H.multiply(H.basis(G.inv(P.skew[k].left_group)), H.basis(x_index(k))),
                       H.basis(G.inv(P.skew[k].right_group)));
    for (auto& c : v) c = -c;
    sx[k] = v;
  }
  H.antipode.resize(dim);
  for (int a = 0; a < dim; ++a) {
    Vec v = H.unit;
    for (auto it = letters[a].rbegin(); it != letters[a].rend(); ++it) v = H.multiply(v, sx[*it]);
    v = H.multiply(v, H.basis(G.inv(group_of[a])));
    for (int i = 0; i < dim; ++i)
      if (!v[i].is_zero()) H.antipode[a].push_back({i, v[i]});
  }

  // generators and basis words
  auto gw = detail::group_words(G);
  for (const auto& [sym, idx] : G.generators()) H.generators.push_back({sym, H.basis(idx)});
  const int ngen = static_cast<int>(G.generators().size());
  for (int k = 0; k < r; ++k) H.generators.push_back({P.skew[k].name, H.basis(x_index(k))});
  H.basis_words.resize(dim);
  for (int a = 0; a < dim; ++a) {
    H.basis_words[a] = gw[group_of[a]];
    for (int k : letters[a]) H.basis_words[a].push_back(ngen + k);
  }

  // An overlap that resolves two ways shows up as a failure of associativity
  // of the normal-form products.
  AxiomReport rep = check_hopf_axioms(H);
  if (!rep.ok) {
    if (rep.failures.front().rfind("associativity", 0) == 0)
      throw NonConfluentPresentation(P.name + ": " + rep.failures.front());
    throw AxiomFailure(P.name + ": " + rep.failures.front());
  }
  return H;
}

// ---------------------------------------------------------------------------
// Tensor products

inline HopfAlgebra tensor_hopf(const HopfAlgebra& A0, const HopfAlgebra& B0, const std::string& name = "") {
  const int m = std::lcm(A0.order, B0.order);
  HopfAlgebra A = A0.embedded(m), B = B0.embedded(m);
  HopfAlgebra T;
  T.name = name.empty() ? A.name + "(x)" + B.name : name;
  T.order = m;
  T.dim = A.dim * B.dim;
  auto idx = [&](int i, int j) { return i * B.dim + j; };
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < B.dim; ++j) T.labels.push_back(A.labels[i] + "|" + B.labels[j]);
  T.mult.resize(static_cast<std::size_t>(T.dim) * T.dim);
  for (int i1 = 0; i1 < A.dim; ++i1)
    for (int j1 = 0; j1 < B.dim; ++j1)
      for (int i2 = 0; i2 < A.dim; ++i2)
        for (int j2 = 0; j2 < B.dim; ++j2) {
          Sparse s;
          for (const auto& ea : A.mult_basis(i1, i2))
            for (const auto& eb : B.mult_basis(j1, j2)) s.push_back({idx(ea.index, eb.index), ea.coeff * eb.coeff});
          T.mult[static_cast<std::size_t>(idx(i1, j1)) * T.dim + idx(i2, j2)] = s;
        }
  T.unit = T.zero();
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < B.dim; ++j) T.unit[idx(i, j)] = A.unit[i] * B.unit[j];
  T.comult.resize(T.dim);
  T.counit.assign(T.dim, Cyclotomic::zero(m));
  T.antipode.resize(T.dim);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < B.dim; ++j) {
      for (const auto& ta : A.comult[i])
        for (const auto& tb : B.comult[j])
          T.comult[idx(i, j)].push_back({ta.coeff * tb.coeff, idx(ta.left, tb.left), idx(ta.right, tb.right)});
      T.counit[idx(i, j)] = A.counit[i] * B.counit[j];
      for (const auto& ea : A.antipode[i])
        for (const auto& eb : B.antipode[j]) T.antipode[idx(i, j)].push_back({idx(ea.index, eb.index), ea.coeff * eb.coeff});
    }
  // generators: a |-> a (x) 1, b |-> 1 (x) b (primed on name clashes)
  auto left_embed = [&](const Vec& v) {
    Vec out = T.zero();
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < B.dim; ++j)
        if (!v[i].is_zero() && !B.unit[j].is_zero()) out[idx(i, j)] += v[i] * B.unit[j];
    return out;
  };
  auto right_embed = [&](const Vec& v) {
    Vec out = T.zero();
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < B.dim; ++j)
        if (!A.unit[i].is_zero() && !v[j].is_zero()) out[idx(i, j)] += A.unit[i] * v[j];
    return out;
  };
  std::set<std::string> used;
  for (const auto& [sym, v] : A.generators) {
    T.generators.push_back({sym, left_embed(v)});
    used.insert(sym);
  }
  const int na = static_cast<int>(A.generators.size());
  for (const auto& [sym, v] : B.generators) {
    std::string s = sym;
    while (used.count(s)) s += "'";
    used.insert(s);
    T.generators.push_back({s, right_embed(v)});
  }
  if (!A.basis_words.empty() && !B.basis_words.empty()) {
    T.basis_words.resize(T.dim);
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < B.dim; ++j) {
        auto w = A.basis_words[i];
        for (int k : B.basis_words[j]) w.push_back(na + k);
        T.basis_words[idx(i, j)] = w;
      }
  }
  T.constants = A.constants;
  for (const auto& [k, c] : B.constants) T.constants.emplace(k, c);
  return T;
}

// ---------------------------------------------------------------------------
// Elements from text

/// Parses a noncommutative expression in the generator symbols, e.g.
/// "alpha-free" forms like "2*g*x - 1/2*g^2 + q*x^3"; juxtaposed symbols
/// multiply ("gx" = g*x). Basis labels are also accepted as whole tokens.
inline Vec parse_element(const HopfAlgebra& H, const std::string& text) {
  std::size_t pos = 0;
  const std::string& s = text;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> Vec {
    throw ParseError(why + " at position " + std::to_string(pos) + " in '" + s + "'");
  };
  auto scalar_vec = [&](const Cyclotomic& c) {
    Vec v = H.unit;
    for (auto& x : v) x *= c;
    return v;
  };
  std::function<Vec()> expr, term, factor, atom;
  atom = [&]() -> Vec {
    skip();
    if (pos >= s.size()) return fail("unexpected end");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Vec v = expr();
      skip();
      if (pos >= s.size() || s[pos] != ')') return fail("expected ')'");
      ++pos;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return scalar_vec(Cyclotomic(H.order, Rational(mpz_class(s.substr(start, pos - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // longest constant name first, then single generator symbols (with primes)
      for (const auto& [name, val] : H.constants) {
        if (s.compare(pos, name.size(), name) == 0) {
          std::size_t end = pos + name.size();
          if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])))) continue;
          pos = end;
          return scalar_vec(val);
        }
      }
      std::size_t best = 0;
      const Vec* found = nullptr;
      for (const auto& [sym, v] : H.generators)
        if (s.compare(pos, sym.size(), sym) == 0 && sym.size() > best) {
          std::size_t end = pos + sym.size();
          if (end < s.size() && s[end] == '\'' && sym.back() != '\'') continue;
          best = sym.size();
          found = &v;
        }
      if (!found) return fail("unknown symbol");
      pos += best;
      return *found;
    }
    return fail("unexpected character");
  };
  factor = [&]() -> Vec {
    Vec base = atom();
    skip();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) return fail("expected exponent");
      int e = std::stoi(s.substr(start, pos - start));
      Vec r = H.unit;
      for (int i = 0; i < e; ++i) r = H.multiply(r, base);
      return r;
    }
    return base;
  };
  term = [&]() -> Vec {
    Vec acc = factor();
    for (;;) {
      skip();
      if (pos >= s.size()) break;
      char c = s[pos];
      if (c == '*') {
        ++pos;
        acc = H.multiply(acc, factor());
      } else if (c == '/') {
        ++pos;
        Vec d = factor();
        // only scalars may divide
        Vec probe = d;
        Cyclotomic k = Cyclotomic::zero(H.order);
        for (int i = 0; i < H.dim; ++i)
          if (!H.unit[i].is_zero()) {
            k = d[i] / H.unit[i];
            break;
          }
        for (auto& x : probe) x = -x;
        Vec diff = scalar_vec(k);
        for (int i = 0; i < H.dim; ++i) diff[i] += probe[i];
        if (!is_zero_vec(diff) || k.is_zero()) return fail("division by a non-scalar or zero");
        for (auto& x : acc) x /= k;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
        acc = H.multiply(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  };
  expr = [&]() -> Vec {
    skip();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    Vec acc = term();
    if (neg)
      for (auto& x : acc) x = -x;
    for (;;) {
      skip();
      if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) break;
      bool minus = s[pos++] == '-';
      Vec t = term();
      for (int i = 0; i < H.dim; ++i) acc[i] = minus ? acc[i] - t[i] : acc[i] + t[i];
    }
    return acc;
  };
  Vec v = expr();
  skip();
  if (pos != s.size()) fail("trailing input");
  return v;
}

}  // namespace hopf
