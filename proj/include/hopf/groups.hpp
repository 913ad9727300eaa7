#pragma once
// Finite groups given by multiplication tables, and their subgroups.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopf/error.hpp"

namespace hopf {

class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup({{0}}, {"1"}) {}

  /// From a Cayley table; `labels[i]` names element i.
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels) : table_(std::move(table)),
                                                                                    labels_(std::move(labels)) {
    validate();
  }

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int power(int a, long k) const {
    int r = identity_;
    long e = ((k % element_order(a)) + element_order(a)) % element_order(a);
    for (long i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  int element_order(int a) const {
    int k = 1, p = a;
    while (p != identity_) {
      p = mul(p, a);
      ++k;
    }
    return k;
  }
  int exponent() const {
    int e = 1;
    for (int a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
    return e;
  }
  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_.at(a); }

  /// Named generators used by the word parser (optional).
  const std::vector<std::pair<std::string, int>>& generators() const { return generators_; }
  void set_generators(std::vector<std::pair<std::string, int>> gens) { generators_ = std::move(gens); }

  int find_label(const std::string& l) const {
    for (int a = 0; a < order(); ++a)
      if (labels_[a] == l) return a;
    return -1;
  }

  /// Element named by a word such as "g^2h", "g'", "ab", "1" or an exact label.
  int parse_word(const std::string& word) const {
    std::string w;
    for (char c : word)
      if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') w += c;
    int exact = find_label(w);
    if (exact >= 0) return exact;
    if (w.empty() || w == "1" || w == "e") return identity_;
    int r = identity_;
    std::size_t i = 0;
    while (i < w.size()) {
      if (!std::isalpha(static_cast<unsigned char>(w[i]))) throw ParseError("bad group word '" + word + "'");
      std::size_t j = i + 1;
      while (j < w.size() && w[j] == '\'') ++j;
      std::string sym = w.substr(i, j - i);
      int g = -1;
      for (const auto& [name, idx] : generators_)
        if (name == sym) g = idx;
      if (g < 0) {
        int l = find_label(sym);
        if (l < 0) throw ParseError("unknown group symbol '" + sym + "' in '" + word + "'");
        g = l;
      }
      long e = 1;
      if (j < w.size() && w[j] == '^') {
        std::size_t k = j + 1;
        if (k < w.size() && w[k] == '-') ++k;
        std::size_t start = k;
        while (k < w.size() && std::isdigit(static_cast<unsigned char>(w[k]))) ++k;
        if (start == k) throw ParseError("missing exponent in '" + word + "'");
        e = std::stol(w.substr(j + 1, k - j - 1));
        j = k;
      }
      r = mul(r, power(g, e));
      i = j;
    }
    return r;
  }

 private:
  void validate() {
    const int n = order();
    if (n == 0) throw Error("empty group");
    if (static_cast<int>(labels_.size()) != n) throw Error("group label count mismatch");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n) throw Error("group table is not square");
      std::set<int> seen(row.begin(), row.end());
      if (static_cast<int>(seen.size()) != n || *seen.begin() != 0 || *seen.rbegin() != n - 1)
        throw Error("group table is not a Latin square");
    }
    for (int c = 0; c < n; ++c) {
      std::set<int> seen;
      for (int r = 0; r < n; ++r) seen.insert(table_[r][c]);
      if (static_cast<int>(seen.size()) != n) throw Error("group table is not a Latin square");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < n; ++a) ok = ok && table_[e][a] == a && table_[a][e] == a;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw Error("group table has no identity");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw Error("group table is not associative");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (table_[a][b] == identity_) inverse_[a] = b;
  }

  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::vector<std::pair<std::string, int>> generators_;
};

/// Finite abelian group C_{n_1} x ... x C_{n_r}. Element index is mixed radix
/// with the first generator fastest; labels read like "g^2h".
inline FiniteGroup abelian_group(const std::vector<std::pair<std::string, int>>& factors) {
  int n = 1;
  for (const auto& f : factors) n *= f.second;
  auto digits = [&](int idx) {
    std::vector<int> d;
    for (const auto& f : factors) {
      d.push_back(idx % f.second);
      idx /= f.second;
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    int idx = 0, scale = 1;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      idx += d[k] * scale;
      scale *= factors[k].second;
    }
    return idx;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    auto da = digits(a);
    std::string l;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (da[k] == 0) continue;
      l += factors[k].first;
      if (da[k] > 1) l += "^" + std::to_string(da[k]);
    }
    labels[a] = l.empty() ? "1" : l;
    for (int b = 0; b < n; ++b) {
      auto db = digits(b);
      std::vector<int> dc(factors.size());
      for (std::size_t k = 0; k < factors.size(); ++k) dc[k] = (da[k] + db[k]) % factors[k].second;
      table[a][b] = index(dc);
    }
  }
  FiniteGroup G(table, labels);
  std::vector<std::pair<std::string, int>> gens;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::vector<int> d(factors.size(), 0);
    if (factors[k].second > 1) d[k] = 1;
    gens.push_back({factors[k].first, index(d)});
  }
  G.set_generators(gens);
  return G;
}

inline FiniteGroup cyclic_group(int n, const std::string& name = "g") { return abelian_group({{name, n}}); }

/// S_3 with r of order 3, s of order 2, s r s = r^-1; elements r^i s^j at index i + 3j.
inline FiniteGroup symmetric_group_3() {
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  std::vector<std::string> labels = {"1", "r", "r^2", "s", "rs", "r^2s"};
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int i1 = a % 3, j1 = a / 3, i2 = b % 3, j2 = b / 3;
      // r^i1 s^j1 r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1+j2)
      int i = ((i1 + (j1 ? -i2 : i2)) % 3 + 3) % 3;
      int j = (j1 + j2) % 2;
      table[a][b] = i + 3 * j;
    }
  FiniteGroup G(table, labels);
  G.set_generators({{"r", 1}, {"s", 3}});
  return G;
}

/// Dihedral group of order 2n: r^i s^j at index i + n j, s r s = r^-1.
inline FiniteGroup dihedral_group(int n) {
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  std::vector<std::string> labels;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i) {
      std::string l = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      if (j) l += "s";
      labels.push_back(l.empty() ? "1" : l);
    }
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b) {
      int i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
      int i = ((i1 + (j1 ? -i2 : i2)) % n + n) % n;
      table[a][b] = i + n * ((j1 + j2) % 2);
    }
  FiniteGroup G(table, labels);
  G.set_generators({{"r", 1}, {"s", n}});
  return G;
}

/// Quaternion group {+-1, +-i, +-j, +-k}; labels use "m" for the central -1.
inline FiniteGroup quaternion_group() {
  // unit quaternions as (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k
  const int mul_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int mul_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const char* names[4] = {"1", "i", "j", "k"};
  std::vector<std::string> labels;
  for (int s = 0; s < 2; ++s)
    for (int a = 0; a < 4; ++a) labels.push_back(s ? (a ? "m" + std::string(names[a]) : "m") : names[a]);
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int ax = x % 4, ay = y % 4;
      int sign = (x / 4 ? -1 : 1) * (y / 4 ? -1 : 1) * mul_sign[ax][ay];
      table[x][y] = mul_axis[ax][ay] + (sign < 0 ? 4 : 0);
    }
  FiniteGroup G(table, labels);
  G.set_generators({{"i", 1}, {"j", 2}});
  return G;
}

// ---------------------------------------------------------------------------

struct Subgroup {
  std::vector<int> members;  // sorted

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int a) const { return std::binary_search(members.begin(), members.end(), a); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  }
  std::vector<std::string> labels(const FiniteGroup& G) const {
    std::vector<std::string> out;
    for (int m : members) out.push_back(G.label(m));
    return out;
  }
  std::string str(const FiniteGroup& G) const {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i) s += (i ? "," : "") + G.label(members[i]);
    return s + "}";
  }
};

/// Subgroup generated by `gens`.
inline Subgroup closure(const FiniteGroup& G, const std::vector<int>& gens) {
  std::set<int> S = {G.identity()};
  std::vector<int> frontier = {G.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int g : gens) {
        int b = G.mul(a, g);
        if (S.insert(b).second) next.push_back(b);
      }
    frontier = next;
  }
  return Subgroup{std::vector<int>(S.begin(), S.end())};
}

inline bool is_subgroup(const FiniteGroup& G, const std::vector<int>& members) {
  std::set<int> S(members.begin(), members.end());
  if (!S.count(G.identity())) return false;
  for (int a : S) {
    if (!S.count(G.inv(a))) return false;
    for (int b : S)
      if (!S.count(G.mul(a, b))) return false;
  }
  return true;
}

/// All subgroups, sorted by (order, members), via cyclic extension.
inline std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& G, int bound = 64) {
  if (G.order() > bound)
    throw BoundExceeded("group of order " + std::to_string(G.order()) + " exceeds bound " + std::to_string(bound));
  std::set<Subgroup> found = {closure(G, {})};
  std::vector<Subgroup> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& S : frontier)
      for (int g = 0; g < G.order(); ++g) {
        if (S.contains(g)) continue;
        auto gens = S.members;
        gens.push_back(g);
        Subgroup T = closure(G, gens);
        if (found.insert(T).second) next.push_back(T);
      }
    frontier = next;
  }
  return std::vector<Subgroup>(found.begin(), found.end());
}

/// Subgroup generated by comma-separated words, e.g. "g^2,h".
inline Subgroup parse_subgroup(const FiniteGroup& G, const std::string& spec) {
  std::vector<int> gens;
  std::string cur;
  auto flush = [&] {
    std::string t;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty() && t != "{" && t != "}") gens.push_back(G.parse_word(t));
    cur.clear();
  };
  for (char c : spec) {
    if (c == ',')
      flush();
    else if (c != '{' && c != '}')
      cur += c;
  }
  flush();
  return closure(G, gens);
}

}  // namespace hopf
