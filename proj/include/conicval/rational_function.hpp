#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "conicval/finite_field.hpp"
#include "conicval/polynomial.hpp"
#include "conicval/rational.hpp"

namespace conicval {

/// num/den over a field K with gcd(num, den) = 1 and den monic. The
/// representation is a normal form, so equality is structural.
template <class K>
class RationalFunction {
 public:
  using Scalar = K;
  using Poly = Polynomial<K>;

  explicit RationalFunction(const K& proto) : num_(proto), den_(Poly::constant(proto.one_like())) {}
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(num_.one_like()) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction constant(const K& c) { return RationalFunction(Poly::constant(c)); }
  static RationalFunction variable(const K& proto) { return RationalFunction(Poly::variable(proto)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const K& zero_elem() const { return num_.zero_elem(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.leading().is_one(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  /// The constant value; only meaningful when is_constant().
  K constant_value() const { return num_.coeff(0); }

  RationalFunction zero_like() const { return RationalFunction(zero_elem()); }
  RationalFunction one_like() const { return constant(zero_elem().one_like()); }
  RationalFunction int_like(const mpz_class& n) const { return constant(zero_elem().int_like(n)); }

  RationalFunction inverse() const {
    if (is_zero()) raise(Errc::DivisionByZero, "inverse of the zero rational function");
    return RationalFunction(den_, num_);
  }

  RationalFunction pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction out(num_.pow(static_cast<unsigned long>(e)), den_.pow(static_cast<unsigned long>(e)));
    return out;
  }

  RationalFunction operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    Poly bd = b.den_ / g;
    return RationalFunction(a.num_ * bd + b.num_ * (a.den_ / g), a.den_ * bd);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return a.zero_like();
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    RationalFunction r(a.zero_elem());
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    r.fix_leading();
    return r;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Substitutes g for the variable.
  RationalFunction compose(const RationalFunction& g) const {
    auto embed = [](const K& c) { return constant(c); };
    RationalFunction zero = g.zero_like();
    return num_.evaluate_in(g, zero, embed) / den_.evaluate_in(g, zero, embed);
  }

  /// f(-x).
  RationalFunction reflected() const { return RationalFunction(num_.reflected(), den_.reflected()); }

  template <class... Inner>
  std::string to_string(std::string_view var, Inner... inner) const {
    std::string n = num_.to_string(var, inner...);
    if (den_.degree() == 0) return n;
    std::string d = den_.to_string(var, inner...);
    if (n.find(' ') != std::string::npos) n = "(" + n + ")";
    if (d.find_first_of(" */") != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  void normalize() {
    if (den_.is_zero()) raise(Errc::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = num_.one_like();
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    fix_leading();
  }

  void fix_leading() {
    if (num_.is_zero()) {
      den_ = num_.one_like();
      return;
    }
    if (!den_.leading().is_one()) {
      K inv = den_.leading().inverse();
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Poly num_;
  Poly den_;
};

template <class K, class... Inner>
CoeffText format_coefficient(const RationalFunction<K>& c, std::string_view var, Inner... inner) {
  if (c.is_constant()) return format_coefficient(c.constant_value(), inner...);
  std::string s = c.to_string(var, inner...);
  return {s, false, s.find_first_of(" /") == std::string::npos};
}

/// Monic gcd over Q; coprimality is first tested modulo word-sized primes.
Polynomial<Rational> gcd(Polynomial<Rational> a, Polynomial<Rational> b);

namespace detail {

inline std::vector<Rational> specialization_points(const Rational&) {
  return {Rational(3), Rational(-2), Rational(5), Rational(-7), Rational(11)};
}

inline std::vector<GF> specialization_points(const GF& proto) {
  std::vector<GF> out;
  const auto q = proto.context()->order();
  for (std::uint64_t i = 2; i < 7 && q > i; ++i) out.push_back(GF::from_index(proto.context(), i));
  return out;
}

template <class K>
K evaluate_at(const Polynomial<K>& p, const K& t0) {
  return p.evaluate_in(t0, t0.zero_like(), [](const K& c) { return c; });
}

/// p with t = t0 substituted in every coefficient, when that keeps the
/// degree and no coefficient denominator vanishes.
template <class K>
std::optional<Polynomial<K>> specialize(const Polynomial<RationalFunction<K>>& p, const K& t0) {
  std::vector<K> cs;
  for (const auto& c : p.coefficients()) {
    const K d = evaluate_at(c.den(), t0);
    if (d.is_zero()) return std::nullopt;
    cs.push_back(evaluate_at(c.num(), t0) / d);
  }
  Polynomial<K> out(std::move(cs), t0.zero_like());
  if (out.degree() != p.degree()) return std::nullopt;
  return out;
}

}  // namespace detail

/// Monic gcd over k(t). A constant point t0 at which both inputs specialize
/// without losing degree and become coprime proves them coprime, which
/// avoids the coefficient growth of Euclid over k(t) in the common case.
template <class K>
Polynomial<RationalFunction<K>> gcd(Polynomial<RationalFunction<K>> a, Polynomial<RationalFunction<K>> b) {
  if (!a.is_zero() && !b.is_zero()) {
    const K& proto = a.zero_elem().zero_elem();
    for (const K& t0 : detail::specialization_points(proto)) {
      auto sa = detail::specialize(a, t0);
      auto sb = detail::specialize(b, t0);
      if (sa && sb && gcd(*sa, *sb).degree() == 0) return a.one_like();
    }
  }
  while (!b.is_zero()) {
    Polynomial<RationalFunction<K>> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class K>
std::optional<RationalFunction<K>> sqrt(const RationalFunction<K>& f) {
  if (f.is_zero()) return f;
  auto c = sqrt(f.num().leading());
  if (!c) return std::nullopt;
  auto n = sqrt(f.num().monic());
  if (!n) return std::nullopt;
  auto d = sqrt(f.den());
  if (!d) return std::nullopt;
  return RationalFunction<K>(*c * *n, *d);
}

template <class K>
bool is_square(const RationalFunction<K>& f) {
  return sqrt(f).has_value();
}

}  // namespace conicval
