#pragma once
// Multivariate polynomials over Q(zeta_m), Buchberger Groebner bases and
// parametric solution families of polynomial systems.
//
// Monomial order: degree reverse lexicographic in which variables with a
// larger index rank higher. Declaring unknowns in basis order therefore makes
// linear relations solve for the later basis element, leaving the earlier one
// as the free parameter.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopf/error.hpp"
#include "hopf/exactfield.hpp"

namespace hopf {

constexpr int kMaxVars = 48;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  int deg = 0;

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint8_t>(power);
    m.deg = power;
    return m;
  }
  bool is_one() const { return deg == 0; }
  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = a.e[i] + b.e[i];
      if (s > 255) throw Error("monomial exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = a.deg + b.deg;
    return r;
  }
  // requires b | a
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    r.deg = a.deg - b.deg;
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::max(a.e[i], b.e[i]);
      r.deg += r.e[i];
    }
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg == b.deg && a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

/// degrevlex (or lex when `lex`), larger variable index ranks higher.
/// Returns -1, 0, 1.
inline int compare(const Monomial& a, const Monomial& b, bool lex = false) {
  if (lex) {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
  }
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

class PolyRing {
 public:
  PolyRing() : PolyRing(1, {}) {}
  PolyRing(int order, std::vector<std::string> names, bool lex = false) : d_(std::make_shared<Data>()) {
    if (static_cast<int>(names.size()) > kMaxVars)
      throw Error("too many variables (" + std::to_string(names.size()) + ")");
    std::set<std::string> seen;
    for (const auto& n : names)
      if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
    d_->order = order;
    d_->names = std::move(names);
    d_->lex = lex;
    Cyclotomic::zero(order);  // validates the order
  }

  int order() const { return d_->order; }
  bool lex() const { return d_->lex; }
  PolyRing with_lex(bool lex) const { return PolyRing(d_->order, d_->names, lex); }
  int nvars() const { return static_cast<int>(d_->names.size()); }
  const std::vector<std::string>& names() const { return d_->names; }
  const std::string& name(int i) const { return d_->names.at(i); }
  int index_of(const std::string& n) const {
    for (int i = 0; i < nvars(); ++i)
      if (d_->names[i] == n) return i;
    return -1;
  }
  /// Same ring with one more (highest ranked) variable.
  PolyRing extended(const std::string& extra) const {
    auto names = d_->names;
    names.push_back(extra);
    return PolyRing(d_->order, names, d_->lex);
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.d_ == b.d_ || (a.d_->order == b.d_->order && a.d_->lex == b.d_->lex && a.d_->names == b.d_->names);
  }
  friend bool operator!=(const PolyRing& a, const PolyRing& b) { return !(a == b); }

 private:
  struct Data {
    int order = 1;
    bool lex = false;
    std::vector<std::string> names;
  };
  std::shared_ptr<Data> d_;
};

struct Term {
  Monomial mon;
  Cyclotomic coeff;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(PolyRing ring) : ring_(std::move(ring)) {}
  Poly(PolyRing ring, const Cyclotomic& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_.push_back({Monomial{}, c});
  }
  static Poly constant(const PolyRing& r, const Rational& q) { return Poly(r, Cyclotomic(r.order(), q)); }
  static Poly var(const PolyRing& r, int i) {
    Poly p(r);
    p.terms_.push_back({Monomial::var(i), Cyclotomic::one(r.order())});
    return p;
  }
  static Poly term(const PolyRing& r, const Monomial& m, const Cyclotomic& c) {
    Poly p(r);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
  bool is_nonzero_constant() const { return terms_.size() == 1 && terms_[0].mon.is_one(); }
  const Term& lead() const { return terms_.front(); }
  int degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mon.deg);
    return d;
  }
  Cyclotomic constant_term() const {
    if (!terms_.empty() && terms_.back().mon.is_one()) return terms_.back().coeff;
    return Cyclotomic::zero(ring_.order());
  }
  /// Indices of the variables that actually occur.
  std::vector<int> variables() const {
    std::vector<int> out;
    for (int i = 0; i < ring_.nvars(); ++i)
      for (const auto& t : terms_)
        if (t.mon.e[i]) {
          out.push_back(i);
          break;
        }
    return out;
  }
  bool uses(int v) const {
    for (const auto& t : terms_)
      if (t.mon.e[v]) return true;
    return false;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mon != b.terms_[i].mon || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, true); }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  Poly mul_term(const Monomial& m, const Cyclotomic& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon * m, t.coeff * c});
    return r;
  }
  Poly scaled(const Cyclotomic& c) const { return mul_term(Monomial{}, c); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    if (a.terms_.size() < b.terms_.size()) return b * a;
    std::map<Monomial, Cyclotomic, MonLess> acc(MonLess{a.ring_.lex()});
    for (const auto& s : b.terms_)
      for (const auto& t : a.terms_) {
        Monomial m = s.mon * t.mon;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(m, s.coeff * t.coeff);
        else
          it->second += s.coeff * t.coeff;
      }
    Poly r(a.ring_);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (!it->second.is_zero()) r.terms_.push_back({it->first, it->second});
    return r;
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly pow(int e) const {
    Poly r = constant(ring_, 1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  Poly monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.front().coeff.inverse());
  }

  /// Exact division by a single variable; requires every term to contain it.
  Poly divide_by_var(int v) const {
    Poly r(ring_);
    for (const auto& t : terms_) {
      if (!t.mon.e[v]) throw Error("divide_by_var: term not divisible");
      Monomial m = t.mon;
      m.e[v]--;
      m.deg--;
      r.terms_.push_back({m, t.coeff});
    }
    return r;
  }

  /// Same polynomial read in another ring; varmap[i] is the target index of variable i.
  Poly remap(const PolyRing& target, const std::vector<int>& varmap) const {
    Poly r(target);
    for (const auto& t : terms_) {
      Monomial m;
      for (int i = 0; i < ring_.nvars(); ++i) {
        if (!t.mon.e[i]) continue;
        if (varmap.at(i) < 0) throw RingMismatch("variable " + ring_.name(i) + " has no image");
        m.e[varmap[i]] += t.mon.e[i];
      }
      m.deg = t.mon.deg;
      r += term(target, m, embed(t.coeff, target.order()));
    }
    return r;
  }

  /// Substitute polynomials (in ring `target`) for every variable.
  Poly substitute(const PolyRing& target, const std::vector<Poly>& images) const {
    Poly r(target);
    std::vector<std::vector<Poly>> powers(ring_.nvars());
    for (const auto& t : terms_) {
      Poly prod(target, embed(t.coeff, target.order()));
      for (int i = 0; i < ring_.nvars() && !prod.is_zero(); ++i) {
        int e = t.mon.e[i];
        if (!e) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(target, 1));
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images.at(i));
        prod *= pw[e];
      }
      r += prod;
    }
    return r;
  }

  /// Evaluate at a point of Q(zeta_m)^n.
  Cyclotomic evaluate(const std::vector<Cyclotomic>& point) const {
    Cyclotomic acc = Cyclotomic::zero(ring_.order());
    for (const auto& t : terms_) {
      Cyclotomic v = t.coeff;
      for (int i = 0; i < ring_.nvars(); ++i)
        if (t.mon.e[i]) v *= point.at(i).pow(t.mon.e[i]);
      acc += v;
    }
    return acc;
  }

  std::string str() const { return str(ring_.names()); }

  /// Render with custom variable names. Non-identifier names are written X[name].
  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::string mon;
      for (int i = 0; i < ring_.nvars(); ++i) {
        int e = t.mon.e[i];
        if (!e) continue;
        if (!mon.empty()) mon += "*";
        mon += printable_name(names.at(i));
        if (e > 1) mon += "^" + std::to_string(e);
      }
      const Cyclotomic& c = t.coeff;
      bool negative = c.is_rational() && c.rational_part() < 0;
      Cyclotomic mag = negative ? -c : c;
      std::string cs;
      if (mag.is_rational()) {
        cs = mag.rational_part().get_str();
      } else {
        cs = mag.str();
        int nonzero = 0;
        for (const auto& q : mag.coeffs()) nonzero += q != 0;
        if (nonzero > 1) cs = "(" + cs + ")";
      }
      if (first)
        os << (negative ? "-" : "");
      else
        os << (negative ? " - " : " + ");
      if (mon.empty())
        os << cs;
      else if (mag.is_one())
        os << mon;
      else
        os << cs << "*" << mon;
      first = false;
    }
    return os.str();
  }

  static std::string printable_name(const std::string& n) {
    bool ident = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
    for (char ch : n)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) ident = false;
    return ident ? n : "X[" + n + "]";
  }

  void check(const Poly& o) const {
    if (ring_ != o.ring_) throw RingMismatch("polynomials from different rings");
  }

 private:
  struct MonLess {
    bool lex;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, lex) < 0; }
  };

  static Poly combine(const Poly& a, const Poly& b, bool subtract) {
    a.check(b);
    Poly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size())
        c = -1;
      else if (j == b.terms_.size())
        c = 1;
      else
        c = compare(a.terms_[i].mon, b.terms_[j].mon, a.ring_.lex());
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
      } else {
        Cyclotomic s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mon, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  PolyRing ring_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// Parsing

/// Parses "2*alpha^2 - (1+zeta)*beta + 1/2". Identifiers resolve to ring
/// variables first, then to `constants` (e.g. "q", "i", "zeta").
class PolyParser {
 public:
  PolyParser(PolyRing ring, std::map<std::string, Cyclotomic> constants = {})
      : ring_(std::move(ring)), constants_(std::move(constants)) {
    if (!constants_.count("zeta")) constants_.emplace("zeta", primitive_root(ring_.order()));
    if (!constants_.count("i") && ring_.order() % 4 == 0)
      constants_.emplace("i", Cyclotomic::zeta_power(ring_.order(), ring_.order() / 4));
  }

  Poly parse(const std::string& text) {
    s_ = text;
    pos_ = 0;
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(ring_);
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly t = product();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+'))
        acc += product();
      else if (eat('-'))
        acc -= product();
      else
        break;
    }
    return acc;
  }

  Poly product() {
    Poly acc = power();
    for (;;) {
      if (eat('*')) {
        acc *= power();
      } else if (eat('/')) {
        Poly d = power();
        if (!d.is_nonzero_constant()) fail(d.is_zero() ? "division by zero" : "division by a non-constant");
        acc = acc.scaled(d.lead().coeff.inverse());
      } else {
        skip();
        // implicit multiplication: "2alpha", "(1+q)alpha"
        if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_'))
          acc *= power();
        else
          break;
      }
    }
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      if (neg) {
        if (!base.is_nonzero_constant()) fail("negative power of a non-constant");
        return Poly(ring_, base.lead().coeff.pow(-e));
      }
      return base.pow(e);
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(ring_, Rational(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id == "X" && pos_ < s_.size() && s_[pos_] == '[') {
        std::size_t close = s_.find(']', pos_);
        if (close == std::string::npos) fail("unterminated X[");
        id = s_.substr(pos_ + 1, close - pos_ - 1);
        pos_ = close + 1;
      }
      int v = ring_.index_of(id);
      if (v >= 0) return Poly::var(ring_, v);
      auto it = constants_.find(id);
      if (it != constants_.end()) return Poly(ring_, embed(it->second, ring_.order()));
      fail("unknown symbol '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  PolyRing ring_;
  std::map<std::string, Cyclotomic> constants_;
  std::string s_;
  std::size_t pos_ = 0;
};

inline Poly parse_poly(const PolyRing& ring, const std::string& text,
                       const std::map<std::string, Cyclotomic>& constants = {}) {
  return PolyParser(ring, constants).parse(text);
}

// ---------------------------------------------------------------------------
// Division and Groebner bases

/// Full remainder of f on division by G (any order of G; G need not be a basis).
inline Poly poly_normal_form(const Poly& f, const std::vector<Poly>& G) {
  for (const auto& g : G) f.check(g);
  Poly p = f, r(f.ring());
  std::vector<Term> rest;
  while (!p.is_zero()) {
    const Term lt = p.lead();
    const Poly* div = nullptr;
    for (const auto& g : G)
      if (!g.is_zero() && g.lead().mon.divides(lt.mon)) {
        div = &g;
        break;
      }
    if (div) {
      p -= div->mul_term(lt.mon / div->lead().mon, lt.coeff / div->lead().coeff);
    } else {
      rest.push_back(lt);
      p -= Poly::term(p.ring(), lt.mon, lt.coeff);
    }
  }
  for (const auto& t : rest) r += Poly::term(f.ring(), t.mon, t.coeff);
  return r;
}

namespace detail {

inline Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial l = Monomial::lcm(f.lead().mon, g.lead().mon);
  return f.mul_term(l / f.lead().mon, f.lead().coeff.inverse()) -
         g.mul_term(l / g.lead().mon, g.lead().coeff.inverse());
}

inline bool poly_less(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.terms().size(), b.terms().size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(a.terms()[i].mon, b.terms()[i].mon, a.ring().lex());
    if (c != 0) return c < 0;
  }
  return a.terms().size() < b.terms().size();
}

// Remove redundant leading monomials, interreduce, normalize, sort.
inline std::vector<Poly> reduce_basis(std::vector<Poly> G) {
  for (const auto& g : G)
    if (g.is_nonzero_constant()) return {Poly::constant(g.ring(), 1)};
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].lead().mon.divides(G[i].lead().mon) && (G[j].lead().mon != G[i].lead().mon || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // keep the leading term, reduce the tail
    const Poly& g = minimal[i];
    Poly lt = Poly::term(g.ring(), g.lead().mon, g.lead().coeff);
    out.push_back((lt + poly_normal_form(g - lt, others)).monic());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return poly_less(b, a); });
  return out;
}

}  // namespace detail

/// Reduced Groebner basis of `basis` + `extra`, where `basis` is already a
/// Groebner basis (pairs inside it are skipped).
inline std::vector<Poly> groebner_extend(const std::vector<Poly>& basis, const std::vector<Poly>& extra) {
  std::vector<Poly> G;
  for (const auto& g : basis)
    if (!g.is_zero()) G.push_back(g.monic());
  const std::size_t old = G.size();
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> done;
  for (std::size_t i = 0; i < old; ++i)
    for (std::size_t j = i + 1; j < old; ++j) done.insert({i, j});

  auto add = [&](Poly h) {
    h = h.monic();
    if (h.is_nonzero_constant()) return false;
    std::size_t k = G.size();
    G.push_back(h);
    for (std::size_t i = 0; i < k; ++i) {
      if (G[i].is_zero()) continue;
      pairs.push_back({i, k, Monomial::lcm(G[i].lead().mon, h.lead().mon)});
    }
    return true;
  };

  for (const auto& f : extra) {
    Poly h = poly_normal_form(f, G);
    if (h.is_zero()) continue;
    if (h.is_nonzero_constant()) return {Poly::constant(f.ring(), 1)};
    add(h);
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [](const Pair& a, const Pair& b) { return compare(a.lcm, b.lcm) < 0; });
    Pair p = *best;
    pairs.erase(best);
    done.insert({p.i, p.j});
    const Poly& f = G[p.i];
    const Poly& g = G[p.j];
    if (Monomial::coprime(f.lead().mon, g.lead().mon)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[k].lead().mon.divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (done.count(key(p.i, k)) && done.count(key(p.j, k))) chain = true;
    }
    if (chain) continue;
    Poly h = poly_normal_form(detail::s_polynomial(f, g), G);
    if (h.is_zero()) continue;
    if (h.is_nonzero_constant()) return {Poly::constant(h.ring(), 1)};
    add(h);
  }
  return detail::reduce_basis(G);
}

/// Reduced Groebner basis (degrevlex). Empty input gives an empty basis.
inline std::vector<Poly> groebner(const std::vector<Poly>& I) { return groebner_extend({}, I); }

inline bool is_unit_ideal(const std::vector<Poly>& gb) { return gb.size() == 1 && gb[0].is_nonzero_constant(); }

inline bool ideal_contains(const std::vector<Poly>& gb, const Poly& f) { return poly_normal_form(f, gb).is_zero(); }

inline bool ideal_equal(const std::vector<Poly>& I, const std::vector<Poly>& J) {
  for (const auto& f : I)
    for (const auto& g : J) f.check(g);
  auto GI = groebner(I), GJ = groebner(J);
  for (const auto& f : I)
    if (!ideal_contains(GJ, f)) return false;
  for (const auto& g : J)
    if (!ideal_contains(GI, g)) return false;
  return true;
}

/// f in the radical of the ideal generated by the Groebner basis gb
/// (Rabinowitsch: 1 in I + <1 - t f>).
inline bool radical_contains(const std::vector<Poly>& gb, const Poly& f) {
  if (ideal_contains(gb, f)) return true;
  if (f.is_zero()) return true;
  const PolyRing& R = f.ring();
  PolyRing Rt = R.extended("_rabinowitsch");
  std::vector<int> map(R.nvars());
  for (int i = 0; i < R.nvars(); ++i) map[i] = i;
  std::vector<Poly> gens;
  for (const auto& g : gb) gens.push_back(g.remap(Rt, map));
  Poly t = Poly::var(Rt, R.nvars());
  Poly extra = Poly::constant(Rt, 1) - t * f.remap(Rt, map);
  return is_unit_ideal(groebner_extend(gens, {extra}));
}

/// V(I) contained in V(J_1) u ... u V(J_k) (over the algebraic closure).
/// Equivalent to every product f_1...f_k (f_i in J_i) lying in rad(I).
inline bool variety_contained(const std::vector<Poly>& I, const std::vector<std::vector<Poly>>& Js) {
  auto gb = groebner(I);
  if (is_unit_ideal(gb)) return true;
  if (Js.empty()) return false;
  // fast path: a single component already contains V(I)
  for (const auto& J : Js) {
    bool all = true;
    for (const auto& f : J)
      if (!radical_contains(gb, f)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  if (Js.size() == 1) return false;
  std::function<bool(const Poly&, std::size_t)> rec = [&](const Poly& prefix, std::size_t k) {
    if (k > 0 && radical_contains(gb, prefix)) return true;
    if (k == Js.size()) return false;
    for (const auto& f : Js[k])
      if (!rec(prefix * f, k + 1)) return false;
    return true;
  };
  return rec(Poly::constant(I.empty() ? Js[0].at(0).ring() : I[0].ring(), 1), 0);
}

/// Union of V(A_i) equals union of V(B_j).
inline bool same_variety(const std::vector<std::vector<Poly>>& A, const std::vector<std::vector<Poly>>& B) {
  for (const auto& I : A)
    if (!variety_contained(I, B)) return false;
  for (const auto& J : B)
    if (!variety_contained(J, A)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Solution families

/// One parametric component. `ideal` is a reduced Groebner basis in the
/// unknown ring; `assignment[v]` expresses unknown v through the free unknowns
/// listed in `free_vars`, which are displayed under `param_names`.
struct SolutionFamily {
  PolyRing ring;
  std::vector<Poly> ideal;
  std::vector<Poly> assignment;
  std::vector<int> free_vars;
  std::vector<std::string> param_names;
  std::vector<Poly> constraints;

  std::vector<std::string> display_names() const {
    std::vector<std::string> names = ring.names();
    for (std::size_t k = 0; k < free_vars.size(); ++k) names[free_vars[k]] = param_names[k];
    return names;
  }
  std::string key() const {
    std::string k;
    for (const auto& g : ideal) k += g.str() + ";";
    return k;
  }
};

inline const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names = {"alpha", "beta", "theta", "gamma", "omega", "delta", "sigma",
                                                 "kappa", "mu",   "nu",    "rho",   "tau",   "eta",   "xi",
                                                 "chi",   "psi",  "phi",   "pi",    "epsilon", "iota"};
  return names;
}

/// Turn a prime-ish leaf ideal into assignments + constraints.
inline SolutionFamily make_family(const std::vector<Poly>& gb) {
  SolutionFamily fam;
  const PolyRing& R = gb.at(0).ring();
  const int n = R.nvars();
  fam.ring = R;
  fam.ideal = gb;
  std::vector<std::optional<Poly>> assigned(n);
  std::vector<Poly> constraints;
  // A lex basis is triangular: each eliminated unknown is a polynomial in
  // lower-ranked ones.
  PolyRing L = R.with_lex(true);
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::vector<Poly> lex_gens;
  for (const auto& g : gb) lex_gens.push_back(g.remap(L, id));
  for (const auto& g : groebner(lex_gens)) {
    const Monomial& lm = g.lead().mon;
    Poly back = g.remap(R, id);
    if (lm.deg == 1) {
      int v = 0;
      while (!lm.e[v]) ++v;
      assigned[v] = Poly::var(R, v) - back;  // g is monic
    } else {
      constraints.push_back(back.monic());
    }
  }
  // Constraints in which some unknown occurs only as a lone linear term are
  // solved for that unknown (highest index first).
  for (;;) {
    bool progress = false;
    for (std::size_t ci = 0; ci < constraints.size() && !progress; ++ci) {
      const Poly& c = constraints[ci];
      for (int v = n - 1; v >= 0 && !progress; --v) {
        if (assigned[v] || !c.uses(v)) continue;
        int occurrences = 0;
        const Term* lone = nullptr;
        for (const auto& t : c.terms())
          if (t.mon.e[v]) {
            ++occurrences;
            if (t.mon.deg == 1) lone = &t;
          }
        if (occurrences != 1 || !lone) continue;
        Poly expr = -(c - Poly::term(R, lone->mon, lone->coeff)).scaled(lone->coeff.inverse());
        std::vector<Poly> images;
        for (int i = 0; i < n; ++i) images.push_back(i == v ? expr : Poly::var(R, i));
        for (auto& a : assigned)
          if (a) a = a->substitute(R, images);
        std::vector<Poly> rest;
        for (std::size_t cj = 0; cj < constraints.size(); ++cj)
          if (cj != ci) {
            Poly s = constraints[cj].substitute(R, images);
            if (!s.is_zero()) rest.push_back(s.monic());
          }
        assigned[v] = expr;
        constraints = rest;
        progress = true;
      }
    }
    if (!progress) break;
  }
  for (int v = 0; v < n; ++v) {
    if (assigned[v]) {
      fam.assignment.push_back(*assigned[v]);
    } else {
      fam.assignment.push_back(Poly::var(R, v));
      fam.free_vars.push_back(v);
    }
  }
  // only parameters that matter get names; a free unknown is still a parameter
  const auto& pn = parameter_names();
  for (std::size_t k = 0; k < fam.free_vars.size(); ++k)
    fam.param_names.push_back(k < pn.size() ? pn[k] : "p" + std::to_string(k));
  fam.constraints = constraints;
  return fam;
}

struct ExtractOptions {
  long split_budget = 1L << 16;
};

/// All solution families of `system` (union of their varieties = V(system)).
inline std::vector<SolutionFamily> extract_families(const std::vector<Poly>& system, const PolyRing& ring,
                                                    const ExtractOptions& opt = {}) {
  for (const auto& f : system)
    if (f.ring() != ring) throw RingMismatch("system polynomial outside the unknown ring");
  std::vector<std::vector<Poly>> leaves;
  long branches = 0;
  std::function<void(const std::vector<Poly>&)> dfs = [&](const std::vector<Poly>& gb) {
    if (is_unit_ideal(gb)) return;
    const Poly* best = nullptr;
    int best_var = -1;
    for (const auto& g : gb) {
      if (g.lead().mon.deg < 2) continue;
      for (int v = 0; v < ring.nvars(); ++v) {
        bool all = true;
        for (const auto& t : g.terms())
          if (!t.mon.e[v]) {
            all = false;
            break;
          }
        if (all && (!best || g.terms().size() < best->terms().size())) {
          best = &g;
          best_var = v;
        }
        if (all) break;
      }
    }
    if (!best) {
      leaves.push_back(gb);
      return;
    }
    branches += 2;
    if (branches > opt.split_budget)
      throw SplitBudgetExceeded("more than " + std::to_string(opt.split_budget) + " branches");
    Poly u = Poly::var(ring, best_var);
    Poly rest = best->divide_by_var(best_var);
    std::vector<Poly> snapshot = gb;
    dfs(groebner_extend(snapshot, {u}));
    dfs(groebner_extend(snapshot, {rest}));
  };
  dfs(groebner(system));

  // deduplicate and drop components contained in others
  std::vector<std::vector<Poly>> uniq;
  for (auto& l : leaves) {
    bool dup = false;
    for (const auto& u : uniq)
      if (u == l) dup = true;
    if (!dup) uniq.push_back(l);
  }
  std::vector<bool> drop(uniq.size(), false);
  for (std::size_t i = 0; i < uniq.size(); ++i)
    for (std::size_t j = 0; j < uniq.size(); ++j) {
      if (i == j || drop[j] || drop[i]) continue;
      bool contained = true;  // V(i) inside V(j)
      for (const auto& g : uniq[j])
        if (!radical_contains(uniq[i], g)) {
          contained = false;
          break;
        }
      if (contained) drop[i] = true;
    }
  std::vector<SolutionFamily> out;
  for (std::size_t i = 0; i < uniq.size(); ++i)
    if (!drop[i]) {
      if (uniq[i].empty()) {
        SolutionFamily fam;
        fam.ring = ring;
        for (int v = 0; v < ring.nvars(); ++v) {
          fam.assignment.push_back(Poly::var(ring, v));
          fam.free_vars.push_back(v);
          fam.param_names.push_back(v < static_cast<int>(parameter_names().size()) ? parameter_names()[v]
                                                                                  : "p" + std::to_string(v));
        }
        out.push_back(fam);
      } else {
        out.push_back(make_family(uniq[i]));
      }
    }
  std::sort(out.begin(), out.end(), [](const SolutionFamily& a, const SolutionFamily& b) { return a.key() < b.key(); });
  return out;
}

/// Every input equation, after substituting the assignments, lies in the
/// ideal of the constraints.
inline bool family_solves(const SolutionFamily& fam, const std::vector<Poly>& system) {
  auto cgb = groebner(fam.constraints);
  for (const auto& eq : system)
    if (!ideal_contains(cgb, eq.substitute(fam.ring, fam.assignment))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Specialization

namespace detail {

inline std::vector<Cyclotomic> root_candidates(int m) {
  std::vector<Cyclotomic> out;
  for (Rational q : {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2), Rational(-1, 2),
                     Rational(3), Rational(-3)})
    out.push_back(Cyclotomic(m, q));
  for (Rational scale : {Rational(1), Rational(2), Rational(1, 2)})
    for (int j = 1; j < m; ++j) {
      if (2 * j == m) continue;
      out.push_back(Cyclotomic::zeta_power(m, j).scaled(scale));
    }
  return out;
}

}  // namespace detail

/// A point of the family's variety: free parameters get `preferred` values
/// when given, otherwise the first of `defaults` consistent with the
/// constraints; constrained parameters are solved exactly when linear and by
/// trying roots of unity times small rationals otherwise. Returns the values
/// of all unknowns, or nullopt when no point was found.
inline std::optional<std::vector<Cyclotomic>> specialize(const SolutionFamily& fam,
                                                         const std::map<std::string, Cyclotomic>& preferred = {},
                                                         std::vector<Cyclotomic> defaults = {}) {
  const PolyRing& R = fam.ring;
  const int m = R.order();
  if (defaults.empty())
    for (int k : {1, 2, 3, -1, 5}) defaults.push_back(Cyclotomic(m, Rational(k)));
  const auto roots = detail::root_candidates(m);
  const std::size_t np = fam.free_vars.size();
  std::vector<Poly> images;
  for (int i = 0; i < R.nvars(); ++i) images.push_back(Poly::var(R, i));
  std::function<bool(std::size_t, const std::vector<Poly>&)> rec = [&](std::size_t k,
                                                                       const std::vector<Poly>& cons) -> bool {
    for (const auto& c : cons)
      if (c.is_nonzero_constant()) return false;
    if (k == np) {
      for (const auto& c : cons)
        if (!c.is_zero()) return false;
      return true;
    }
    const int v = fam.free_vars[k];
    std::vector<Cyclotomic> options;
    auto pref = preferred.find(fam.param_names[k]);
    // a univariate constraint in v decides the candidates
    const Poly* uni = nullptr;
    for (const auto& c : cons) {
      auto vars = c.variables();
      if (vars.size() == 1 && vars[0] == v) {
        uni = &c;
        break;
      }
    }
    if (pref != preferred.end()) {
      options.push_back(embed(pref->second, m));
    } else if (uni) {
      if (uni->degree() == 1) {
        options.push_back(-uni->constant_term() / uni->lead().coeff);
      } else {
        // prefer nonzero roots
        for (const auto& r : roots)
          if (!r.is_zero()) options.push_back(r);
        options.push_back(Cyclotomic::zero(m));
      }
    } else {
      options = defaults;
    }
    for (const auto& val : options) {
      std::vector<Poly> sub = images;
      sub[v] = Poly(R, val);
      std::vector<Poly> next;
      bool bad = false;
      for (const auto& c : cons) {
        Poly s = c.substitute(R, sub);
        if (s.is_nonzero_constant()) {
          bad = true;
          break;
        }
        if (!s.is_zero()) next.push_back(s);
      }
      if (bad) continue;
      images[v] = Poly(R, val);
      if (rec(k + 1, next)) return true;
      images[v] = Poly::var(R, v);
    }
    return false;
  };
  if (!rec(0, fam.constraints)) return std::nullopt;
  std::vector<Cyclotomic> point(R.nvars(), Cyclotomic::zero(m));
  std::vector<Cyclotomic> params(R.nvars(), Cyclotomic::zero(m));
  for (int v : fam.free_vars) params[v] = images[v].constant_term();
  for (int v = 0; v < R.nvars(); ++v) point[v] = fam.assignment[v].evaluate(params);
  return point;
}

}  // namespace hopf
