#pragma once
// Exact arithmetic in the cyclotomic fields Q(zeta_m).
//
// An element of Q(zeta_m) is stored as its coefficient vector on the power
// basis 1, zeta, ..., zeta^(phi(m)-1), i.e. as the canonical remainder modulo
// the m-th cyclotomic polynomial. Equality is therefore coefficient-wise.

#include <gmpxx.h>

#include <complex>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopf/error.hpp"

namespace hopf {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  r.canonicalize();
  if (r.get_den() == 0) throw DivisionByZero("rational literal '" + s + "'");
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace detail {

// Integer polynomials, lowest degree first.
using IntPoly = std::vector<Integer>;

inline IntPoly cyclotomic_polynomial(int m) {
  // Phi_m = (X^m - 1) / prod_{d | m, d < m} Phi_d
  IntPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    IntPoly den = cyclotomic_polynomial(d);
    // exact division by a monic polynomial
    IntPoly quot(num.size() - den.size() + 1, 0);
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
      Integer c = num[k + den.size() - 1];
      quot[k] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

struct CycloContext {
  int order = 1;
  int phi = 1;
  IntPoly minimal;                           // Phi_m, monic, degree phi
  std::vector<std::vector<Rational>> power;  // zeta^k reduced, k < 2*phi + m
};

inline const CycloContext* cyclo_context(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycloContext>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second.get();
  auto ctx = std::make_unique<CycloContext>();
  ctx->order = m;
  ctx->phi = euler_phi(m);
  ctx->minimal = cyclotomic_polynomial(m);
  const int n = ctx->phi;
  const int count = 2 * n + m;
  std::vector<Rational> cur(n, 0);
  cur[0] = 1;
  for (int k = 0; k < count; ++k) {
    ctx->power.push_back(cur);
    // multiply by zeta: shift, then fold X^n = -sum_{i<n} c_i X^i
    Rational top = cur[n - 1];
    for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < n; ++i) cur[i] -= top * Rational(ctx->minimal[i]);
  }
  const CycloContext* raw = ctx.get();
  cache.emplace(m, std::move(ctx));
  return raw;
}

}  // namespace detail

/// Element of Q(zeta_m). Order m = 1 gives plain rationals.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int order) : ctx_(context(order)), c_(ctx_->phi) {}
  Cyclotomic(int order, const Rational& value) : Cyclotomic(order) { c_[0] = value; }
  Cyclotomic(int order, std::vector<Rational> coeffs) : ctx_(context(order)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != ctx_->phi)
      throw DimensionMismatch("cyclotomic coefficient vector has length " + std::to_string(c_.size()) +
                              ", expected phi(" + std::to_string(order) + ")=" + std::to_string(ctx_->phi));
    for (auto& q : c_) q.canonicalize();
  }

  static Cyclotomic zero(int order) { return Cyclotomic(order); }
  static Cyclotomic one(int order) { return Cyclotomic(order, Rational(1)); }

  /// zeta_m^k for any integer k.
  static Cyclotomic zeta_power(int order, long k) {
    const auto* ctx = context(order);
    long r = ((k % order) + order) % order;
    return Cyclotomic(ctx, ctx->power[r]);
  }

  int order() const { return ctx_->order; }
  int degree() const { return ctx_->phi; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (q != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_one() const { return is_rational() && c_[0] == 1; }
  const Rational& rational_part() const { return c_[0]; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.ctx_ == b.ctx_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic operator-() const {
    Cyclotomic r(*this);
    for (auto& q : r.c_) q = -q;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
  }
  Cyclotomic& operator/=(const Cyclotomic& o) {
    *this = *this / o;
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    if (b.is_rational()) return a.scaled(b.c_[0]);
    if (a.is_rational()) return b.scaled(a.c_[0]);
    const int n = a.ctx_->phi;
    std::vector<Rational> conv(2 * n - 1, 0);
    for (int i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (b.c_[j] != 0) conv[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<Rational> out(conv.begin(), conv.begin() + n);
    for (int k = n; k < 2 * n - 1; ++k) {
      if (conv[k] == 0) continue;
      const auto& row = a.ctx_->power[k];
      for (int i = 0; i < n; ++i)
        if (row[i] != 0) out[i] += conv[k] * row[i];
    }
    return Cyclotomic(a.ctx_, std::move(out));
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    return a * b.inverse();
  }

  Cyclotomic scaled(const Rational& r) const {
    Cyclotomic out(*this);
    for (auto& q : out.c_) q *= r;
    return out;
  }

  /// Multiplicative inverse; solves (multiplication-by-a) v = 1 exactly.
  Cyclotomic inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
    if (is_rational()) return Cyclotomic(ctx_->order, Rational(1) / c_[0]);
    const int n = ctx_->phi;
    // column j of M is a * zeta^j
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, 0));
    for (int j = 0; j < n; ++j) {
      Cyclotomic col = *this * Cyclotomic(ctx_, ctx_->power[j]);
      for (int i = 0; i < n; ++i) m[i][j] = col.c_[i];
    }
    m[0][n] = 1;
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (piv < n && m[piv][col] == 0) ++piv;
      if (piv == n) throw DivisionByZero("singular multiplication matrix");
      std::swap(m[piv], m[col]);
      Rational inv = Rational(1) / m[col][col];
      for (int k = col; k <= n; ++k) m[col][k] *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col || m[r][col] == 0) continue;
        Rational f = m[r][col];
        for (int k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
      }
    }
    std::vector<Rational> out(n);
    for (int i = 0; i < n; ++i) out[i] = m[i][n];
    return Cyclotomic(ctx_, std::move(out));
  }

  Cyclotomic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result = one(order()), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// Debug-only numerical value at zeta_m = exp(2 pi i / m).
  std::complex<double> approx() const {
    const double pi = std::acos(-1.0);
    std::complex<double> z = std::polar(1.0, 2 * pi / ctx_->order), acc = 0, zk = 1;
    for (const auto& q : c_) {
      acc += q.get_d() * zk;
      zk *= z;
    }
    return acc;
  }

  /// Human-readable form in terms of `zeta`, e.g. "1/2 - zeta^2".
  std::string str(const std::string& root = "zeta") const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < ctx_->phi; ++k) {
      const Rational& q = c_[k];
      if (q == 0) continue;
      Rational mag = abs(q);
      if (!first) os << (q < 0 ? " - " : " + ");
      else if (q < 0) os << "-";
      if (k == 0) {
        os << mag.get_str();
      } else {
        if (mag != 1) os << mag.get_str() << "*";
        os << root;
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  Cyclotomic(const detail::CycloContext* ctx, std::vector<Rational> c) : ctx_(ctx), c_(std::move(c)) {}

  static const detail::CycloContext* context(int order) {
    if (order < 1) throw Error("cyclotomic order must be positive, got " + std::to_string(order));
    return detail::cyclo_context(order);
  }

  void check(const Cyclotomic& o) const {
    if (ctx_ != o.ctx_)
      throw OrderMismatch("Q(zeta_" + std::to_string(order()) + ") vs Q(zeta_" + std::to_string(o.order()) + ")");
  }

  const detail::CycloContext* ctx_;
  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.str(); }

enum class ArithOp { add, sub, mul, div };

inline Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw Error("unknown arithmetic operation");
}

/// The chosen primitive m-th root of unity zeta_m (image of X in Q[X]/Phi_m).
inline Cyclotomic primitive_root(int m) { return Cyclotomic::zeta_power(m, 1); }

/// Field embedding Q(zeta_m) -> Q(zeta_M), zeta_m |-> zeta_M^(M/m).
inline Cyclotomic embed(const Cyclotomic& a, int target) {
  const int m = a.order();
  if (target < 1 || target % m != 0)
    throw NotDivisible(std::to_string(m) + " does not divide " + std::to_string(target));
  if (target == m) return a;
  const int step = target / m;
  Cyclotomic out(target);
  for (int k = 0; k < a.degree(); ++k) {
    if (a.coeffs()[k] == 0) continue;
    out += Cyclotomic::zeta_power(target, static_cast<long>(k) * step).scaled(a.coeffs()[k]);
  }
  return out;
}

/// Multiplicative order of a root of unity; 0 when a is not one of order <= bound.
inline int multiplicative_order(const Cyclotomic& a, int bound = 1 << 12) {
  Cyclotomic p = a;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= a;
  }
  return 0;
}

inline int lcm_order(int a, int b) { return std::lcm(a, b); }

}  // namespace hopf
