#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "conicval/valuation.hpp"

namespace conicval {

namespace detail {

inline std::string format_over(const PAdicValuation&, const RationalFunction<Rational>& h, std::string_view var) {
  return h.to_string(var);
}

template <class K>
std::string format_over(const PlaceValuation<K>&, const RationalFunction<RationalFunction<K>>& h,
                        std::string_view var) {
  return h.to_string(var, "t");
}

}  // namespace detail

/// The Gauss extension of a discrete valuation v on E to E(X) with respect to
/// a pivot Y: w(sum c_i Y^i) = min v(c_i), with residue field kappa(Ybar).
///
/// Supported pivots are Moebius transformations of X (which generate E(X)) and
/// c*X^2, whose extension lives on the subfield E(X^2) and only evaluates even
/// functions.
template <DiscreteValuation V>
class GaussExtension {
 public:
  using Base = V;
  using Scalar = typename V::Element;
  using ScalarResidue = typename V::Residue;
  using Element = RationalFunction<Scalar>;
  using Residue = RationalFunction<ScalarResidue>;
  using Poly = Polynomial<Scalar>;

  enum class PivotKind { Identity, Moebius, Square };

  /// Pivot X.
  explicit GaussExtension(V v) : v_(std::move(v)), kind_(PivotKind::Identity), pivot_(variable()), inverse_(pivot_) {}

  /// Pivot Y = (alpha X + beta)/(gamma X + delta); InvalidPivot unless Y
  /// generates E(X), i.e. has degree one.
  static GaussExtension with_pivot(V v, const Element& y) {
    GaussExtension g(std::move(v));
    if (y.is_constant()) raise(Errc::InvalidPivot, "pivot is a constant");
    if (std::max(y.num().degree(), y.den().degree()) != 1) {
      raise(Errc::InvalidPivot, "pivot does not generate the rational function field");
    }
    const Scalar zero = g.v_.zero();
    const Scalar alpha = y.num().coeff(1), beta = y.num().coeff(0);
    const Scalar gamma = y.den().coeff(1), delta = y.den().coeff(0);
    if (y == g.variable()) return g;
    g.kind_ = PivotKind::Moebius;
    g.pivot_ = y;
    // X = (delta Y - beta) / (alpha - gamma Y)
    g.inverse_ = Element(Poly(std::vector<Scalar>{-beta, delta}, zero), Poly(std::vector<Scalar>{alpha, -gamma}, zero));
    return g;
  }

  /// Pivot c*X^2 on the subfield E(X^2).
  static GaussExtension on_square(V v, const Scalar& c) {
    if (c.is_zero()) raise(Errc::InvalidPivot, "pivot is a constant");
    GaussExtension g(std::move(v));
    g.kind_ = PivotKind::Square;
    g.c_ = c;
    g.pivot_ = Element(Poly::monomial(c, 2));
    return g;
  }

  const V& base() const { return v_; }
  PivotKind pivot_kind() const { return kind_; }
  /// The pivot as a function of X.
  const Element& pivot() const { return pivot_; }

  /// h rewritten as a rational function of the pivot.
  Element in_pivot(const Element& h) const {
    switch (kind_) {
      case PivotKind::Identity:
        return h;
      case PivotKind::Moebius:
        return h.compose(inverse_);
      case PivotKind::Square: {
        auto half = [&](const Poly& p) {
          for (std::size_t i = 1; i < p.coefficients().size(); i += 2) {
            if (!p.coefficients()[i].is_zero()) raise(Errc::NotInSubfield, "element is not a function of X^2");
          }
          return p.decimated(0, 2);
        };
        Element z = Element(half(h.num()), half(h.den()));
        // X^2 = Y / c
        return z.compose(Element(Poly::monomial(c_->inverse(), 1)));
      }
    }
    raise(Errc::Unreachable, "unknown pivot kind");
  }

  long order(const Element& h) const {
    if (h.is_zero()) raise(Errc::ZeroInput, "valuation of 0 is infinite");
    return order_of_fraction(h.num(), h.den());
  }

  /// Order of num/den without reducing the fraction first.
  long order_of_fraction(const Poly& num, const Poly& den) const {
    if (num.is_zero()) raise(Errc::ZeroInput, "valuation of 0 is infinite");
    if (den.is_zero()) raise(Errc::DivisionByZero, "zero denominator");
    switch (kind_) {
      case PivotKind::Identity:
        return min_order(num) - min_order(den);
      case PivotKind::Moebius: {
        // p(X) = P(Y) / (alpha - gamma Y)^deg p with P the homogenized substitution
        const long shift = static_cast<long>(den.degree()) - static_cast<long>(num.degree());
        return min_order(homogenized(num)) - min_order(homogenized(den)) + shift * min_order(inverse_.den());
      }
      case PivotKind::Square: {
        Element y = in_pivot(Element(num, den));
        return min_order(y.num()) - min_order(y.den());
      }
    }
    raise(Errc::Unreachable, "unknown pivot kind");
  }

  Value value(const Element& h) const {
    if (h.is_zero()) return Value::infinity();
    return Value::integer(order(h));
  }

  /// Residue in kappa(Ybar); raises NonzeroValue unless w(h) = 0.
  Residue residue(const Element& h) const {
    if (h.is_zero()) raise(Errc::NonzeroValue, "residue of 0 requested");
    return residue_of_fraction(h.num(), h.den());
  }

  /// Residue of num/den without reducing the fraction first.
  Residue residue_of_fraction(const Poly& num, const Poly& den) const {
    if (num.is_zero()) raise(Errc::NonzeroValue, "residue of 0 requested");
    const long val = order_of_fraction(num, den);
    if (val != 0) raise(Errc::NonzeroValue, "element has value " + std::to_string(val) + ", not 0");
    auto unit_residue = [&](const Poly& p) {
      const long m = min_order(p);
      return Residue(reduce(p, m));
    };
    switch (kind_) {
      case PivotKind::Identity:
        return unit_residue(num) / unit_residue(den);
      case PivotKind::Moebius: {
        const long shift = static_cast<long>(den.degree()) - static_cast<long>(num.degree());
        return unit_residue(homogenized(num)) / unit_residue(homogenized(den)) * unit_residue(inverse_.den()).pow(shift);
      }
      case PivotKind::Square: {
        Element y = in_pivot(Element(num, den));
        return unit_residue(y.num()) / unit_residue(y.den());
      }
    }
    raise(Errc::Unreachable, "unknown pivot kind");
  }

  UnitPart<Element> unit_part(const Element& h) const {
    const long m = order(h);
    return {m, h * uniformizer_power(-m)};
  }

  Element uniformizer_power(long m) const { return Element::constant(v_.uniformizer_power(m)); }

  /// Canonical section: coefficients lifted through v, Ybar mapped to the pivot.
  Element lift(const Residue& r) const {
    auto lift_poly = [&](const Polynomial<ScalarResidue>& p) {
      std::vector<Scalar> cs;
      for (const auto& c : p.coefficients()) cs.push_back(v_.lift(c));
      Poly lifted(std::move(cs), v_.zero());
      return lifted.evaluate_in(pivot_, zero(), [](const Scalar& c) { return Element::constant(c); });
    };
    return lift_poly(r.num()) / lift_poly(r.den());
  }

  Element zero() const { return Element(v_.zero()); }
  Element one() const { return Element::constant(v_.one()); }
  Element variable() const { return Element::variable(v_.zero()); }
  Residue residue_zero() const { return Residue(v_.residue_zero()); }

  std::string format(const Element& h) const { return detail::format_over(v_, h, "x"); }
  std::string format_residue(const Residue& r) const { return r.to_string("Y"); }

 private:
  long min_order(const Poly& p) const {
    long m = 0;
    bool first = true;
    for (const auto& c : p.coefficients()) {
      if (c.is_zero()) continue;
      const long o = v_.order(c);
      if (first || o < m) m = o;
      first = false;
    }
    return m;
  }

  Poly homogenized(const Poly& p) const {
    const Poly& top = inverse_.num();
    const Poly& bottom = inverse_.den();
    const int n = p.degree();
    Poly out(v_.zero());
    for (int i = 0; i <= n; ++i) {
      const auto& c = p.coefficients()[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      out += c * top.pow(static_cast<unsigned long>(i)) * bottom.pow(static_cast<unsigned long>(n - i));
    }
    return out;
  }

  Polynomial<ScalarResidue> reduce(const Poly& p, long m) const {
    const Scalar scale = v_.uniformizer_power(-m);
    std::vector<ScalarResidue> out;
    for (const auto& c : p.coefficients()) {
      out.push_back(c.is_zero() || v_.order(c) > m ? v_.residue_zero() : v_.residue(c * scale));
    }
    return Polynomial<ScalarResidue>(std::move(out), v_.residue_zero());
  }

  V v_;
  PivotKind kind_;
  Element pivot_;
  Element inverse_;
  std::optional<Scalar> c_;
};

/// [E(X):E(Y)] and whether X is integral over E[Y].
struct SubfieldDegree {
  int degree;
  bool integral;
};

template <class K>
SubfieldDegree subfield_degree(const RationalFunction<K>& y) {
  if (y.is_constant()) raise(Errc::ConstantInput, "Y is constant");
  return {std::max(y.num().degree(), y.den().degree()), y.num().degree() > y.den().degree()};
}

enum class QuadraticKind { Ramified, SplitPair, Inert };

inline const char* to_string(QuadraticKind k) {
  switch (k) {
    case QuadraticKind::Ramified:
      return "ramified";
    case QuadraticKind::SplitPair:
      return "split_pair";
    case QuadraticKind::Inert:
      return "inert";
  }
  return "?";
}

/// How v extends to E(sqrt a). For the even case `unit` is a * pi^(-v(a)),
/// whose residue decides between two extensions (square) and one inert
/// extension with residue field kappa(sqrt ubar).
template <DiscreteValuation V>
struct QuadraticAnalysis {
  QuadraticKind kind;
  long value;
  std::optional<typename V::Element> unit;
  std::optional<typename V::Residue> unit_residue;
};

template <DiscreteValuation V>
QuadraticAnalysis<V> quadratic_extension_analysis(const V& v, const typename V::Element& a) {
  if (a.is_zero()) raise(Errc::ZeroInput, "a = 0");
  if (is_square(a)) raise(Errc::SquareInput, v.format(a) + " is a square");
  QuadraticAnalysis<V> out{QuadraticKind::Ramified, v.order(a), std::nullopt, std::nullopt};
  if (out.value % 2 != 0) return out;
  out.unit = a * v.uniformizer_power(-out.value);
  out.unit_residue = v.residue(*out.unit);
  out.kind = is_square(*out.unit_residue) ? QuadraticKind::SplitPair : QuadraticKind::Inert;
  return out;
}

static_assert(DiscreteValuation<GaussExtension<PAdicValuation>>);

}  // namespace conicval
