#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "conicval/error.hpp"
#include "conicval/finite_field.hpp"
#include "conicval/rational.hpp"

namespace conicval {

/// How a coefficient renders inside a larger expression.
struct CoeffText {
  std::string text;  // without the leading sign when `negative`
  bool negative = false;
  bool atomic = true;  // safe to juxtapose as "text*x" without parentheses
};

inline CoeffText format_coefficient(const Rational& c) {
  if (c.sign() < 0) return {(-c).to_string(), true, true};
  return {c.to_string(), false, true};
}

inline CoeffText format_coefficient(const GF& c) {
  std::string s = c.to_string();
  return {s, false, c.context()->is_prime_field() || s.find(' ') == std::string::npos};
}

/// Dense univariate polynomial over a field K, lowest degree first. The zero
/// polynomial has no coefficients; a zero element of K is kept so that the
/// coefficient context survives.
template <class K>
class Polynomial {
 public:
  using Scalar = K;

  explicit Polynomial(const K& proto) : zero_(proto.zero_like()) {}
  Polynomial(std::vector<K> coeffs, const K& proto) : c_(std::move(coeffs)), zero_(proto.zero_like()) { trim(); }

  static Polynomial constant(const K& c) { return Polynomial(std::vector<K>{c}, c); }
  static Polynomial monomial(const K& c, std::size_t n) {
    std::vector<K> v(n + 1, c.zero_like());
    v[n] = c;
    return Polynomial(std::move(v), c);
  }
  static Polynomial variable(const K& proto) { return monomial(proto.one_like(), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  const K& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const std::vector<K>& coefficients() const { return c_; }
  const K& leading() const {
    if (c_.empty()) raise(Errc::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return c_.back();
  }
  const K& zero_elem() const { return zero_; }
  K one_elem() const { return zero_.one_like(); }

  Polynomial zero_like() const { return Polynomial(zero_); }
  Polynomial one_like() const { return constant(zero_.one_like()); }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.zero_);
    std::vector<K> out(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out), a.zero_);
  }
  friend Polynomial operator*(const K& s, Polynomial p) {
    for (auto& x : p.c_) x = s * x;
    p.trim();
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder of Euclidean division.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) raise(Errc::DivisionByZero, "polynomial division by zero");
    Polynomial r(*this);
    if (degree() < d.degree()) return {Polynomial(zero_), r};
    std::vector<K> q(static_cast<std::size_t>(degree() - d.degree() + 1), zero_);
    K inv = d.leading().inverse();
    const int dd = d.degree();
    for (int k = degree() - dd; k >= 0; --k) {
      const std::size_t top = static_cast<std::size_t>(k + dd);
      if (top >= r.c_.size() || r.c_[top].is_zero()) continue;
      K f = r.c_[top] * inv;
      q[static_cast<std::size_t>(k)] = f;
      for (int j = 0; j <= dd; ++j) r.c_[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    r.trim();
    return {Polynomial(std::move(q), zero_), r};
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divmod(b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
  }

  /// Horner evaluation at a point of K.
  K operator()(const K& x) const {
    K acc = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation in any algebra T that accepts K scalars through `embed`.
  template <class T, class Embed>
  T evaluate_in(const T& x, const T& zero, Embed embed) const {
    T acc = zero;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + embed(*it);
    return acc;
  }

  Polynomial compose(const Polynomial& g) const {
    return evaluate_in(g, Polynomial(zero_), [](const K& c) { return constant(c); });
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial(zero_);
    std::vector<K> out;
    out.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * zero_.int_like(static_cast<long>(i)));
    return Polynomial(std::move(out), zero_);
  }

  Polynomial pow(unsigned long n) const {
    Polynomial result = one_like(), base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

  /// p(-x).
  Polynomial reflected() const {
    Polynomial r(*this);
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  /// Coefficients at indices start, start+step, ... as a new polynomial.
  Polynomial decimated(std::size_t start, std::size_t step) const {
    std::vector<K> out;
    for (std::size_t i = start; i < c_.size(); i += step) out.push_back(c_[i]);
    return Polynomial(std::move(out), zero_);
  }

  /// p(x^k).
  Polynomial inflated(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<K> out((c_.size() - 1) * k + 1, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
    return Polynomial(std::move(out), zero_);
  }

  /// Renders with `var` as the variable; extra names are passed to the
  /// coefficients (for polynomials over rational function fields).
  template <class... Inner>
  std::string to_string(std::string_view var, Inner... inner) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      CoeffText ct = format_coefficient(c_[k], inner...);
      std::string mono;
      if (k >= 1) mono = std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
      std::string body;
      if (k == 0) {
        body = ct.atomic ? ct.text : "(" + ct.text + ")";
      } else if (ct.text == "1") {
        body = mono;
      } else {
        body = (ct.atomic ? ct.text : "(" + ct.text + ")") + "*" + mono;
      }
      if (first) {
        out += (ct.negative ? "-" : "") + body;
      } else {
        out += (ct.negative ? " - " : " + ") + body;
      }
      first = false;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<K> c_;
  K zero_;
};

template <class K, class... Inner>
CoeffText format_coefficient(const Polynomial<K>& p, Inner... inner) {
  std::string s = p.to_string(inner...);
  return {s, false, s.find(' ') == std::string::npos};
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    Polynomial<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// (g, s, t) with s*a + t*b = g = gcd(a, b) monic.
template <class K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> extended_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
  Polynomial<K> r0 = a, r1 = b;
  Polynomial<K> s0 = a.one_like(), s1 = a.zero_like();
  Polynomial<K> t0 = a.zero_like(), t1 = a.one_like();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial<K> s2 = s0 - q * s1;
    Polynomial<K> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = r0.leading().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

/// base^e mod m.
template <class K>
Polynomial<K> powmod(Polynomial<K> base, mpz_class e, const Polynomial<K>& m) {
  Polynomial<K> result = m.one_like() % m;
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = (result * base) % m;
    e >>= 1;
    if (e > 0) base = (base * base) % m;
  }
  return result;
}

/// Square root of a polynomial over a field of characteristic != 2, if any.
template <class K>
std::optional<Polynomial<K>> sqrt(const Polynomial<K>& f) {
  if (f.is_zero()) return f;
  if (f.degree() % 2 != 0) return std::nullopt;
  auto lead_root = sqrt(f.leading());
  if (!lead_root) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(f.degree() / 2);
  std::vector<K> g(n + 1, f.zero_elem());
  g[n] = *lead_root;
  K two_lead_inv = (*lead_root * f.zero_elem().int_like(2)).inverse();
  for (std::size_t k = 1; k <= n; ++k) {
    // coefficient of x^{2n-k} in g^2 involves g[n-k] linearly
    const std::size_t target = 2 * n - k;
    K acc = f.coeff(target);
    for (std::size_t i = n - k + 1; i <= n; ++i) {
      const std::size_t j = target - i;
      if (j > n || j <= n - k) continue;
      acc -= g[i] * g[j];
    }
    g[n - k] = acc * two_lead_inv;
  }
  Polynomial<K> root(std::move(g), f.zero_elem());
  if (root * root == f) return root;
  return std::nullopt;
}

}  // namespace conicval
