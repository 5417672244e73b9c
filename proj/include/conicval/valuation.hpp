#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "conicval/factor.hpp"
#include "conicval/finite_field.hpp"
#include "conicval/rational.hpp"
#include "conicval/rational_function.hpp"
#include "conicval/value.hpp"

namespace conicval {

/// x = pi^exponent * unit with v(unit) = 0 for the canonical uniformizer pi.
template <class E>
struct UnitPart {
  long exponent;
  E unit;
};

/// A normalized discrete rank-1 valuation with residue characteristic != 2.
template <class V>
concept DiscreteValuation = requires(const V& v, const typename V::Element& x, const typename V::Residue& r) {
  { v.value(x) } -> std::same_as<Value>;
  { v.order(x) } -> std::same_as<long>;
  { v.residue(x) } -> std::same_as<typename V::Residue>;
  { v.unit_part(x) } -> std::same_as<UnitPart<typename V::Element>>;
  { v.uniformizer_power(1L) } -> std::same_as<typename V::Element>;
  { v.lift(r) } -> std::same_as<typename V::Element>;
  { v.zero() } -> std::same_as<typename V::Element>;
  { v.residue_zero() } -> std::same_as<typename V::Residue>;
  { v.format(x) } -> std::same_as<std::string>;
  { v.format_residue(r) } -> std::same_as<std::string>;
};

/// The p-adic valuation on Q, p an odd prime; residue field F_p.
class PAdicValuation {
 public:
  using Element = Rational;
  using Residue = GF;

  explicit PAdicValuation(std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  const GFContextPtr& residue_context() const { return ctx_; }

  Value value(const Rational& x) const;
  long order(const Rational& x) const;
  GF residue(const Rational& x) const;
  UnitPart<Rational> unit_part(const Rational& x) const;
  Rational uniformizer_power(long m) const;
  /// Integer representative in [0, p).
  Rational lift(const GF& r) const;

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  GF residue_zero() const { return GF(ctx_, 0); }
  bool residue_field_is_finite() const { return true; }

  std::string format(const Rational& x) const { return x.to_string(); }
  std::string format_residue(const GF& r) const { return r.to_string(); }
  std::string residue_field_name() const { return ctx_->describe(); }
  std::string base_field_name() const { return "Q"; }
  /// CLI descriptor, e.g. "Q:p=5".
  std::string describe() const { return "Q:p=" + std::to_string(p_); }

 private:
  std::uint64_t p_;
  GFContextPtr ctx_;
};

namespace detail {

template <class K>
struct PlaceResidue;
template <>
struct PlaceResidue<Rational> {
  using type = Rational;
};
template <>
struct PlaceResidue<GF> {
  using type = GF;
};

}  // namespace detail

/// A place of k(t) for k = Q or k = F_q: the pi-adic valuation for a monic
/// irreducible pi, or the degree valuation v(f) = -deg f at infinity.
/// Over Q only places of degree one are supported (residue field Q).
template <class K>
class PlaceValuation {
 public:
  using Constant = K;
  using Element = RationalFunction<K>;
  using Residue = typename detail::PlaceResidue<K>::type;
  using Poly = Polynomial<K>;

  /// Infinite place.
  explicit PlaceValuation(const K& proto);
  /// Finite place for a monic irreducible `place`.
  explicit PlaceValuation(const Poly& place);

  bool is_infinite() const { return !place_.has_value(); }
  const std::optional<Poly>& place() const { return place_; }
  const K& constant_proto() const { return proto_; }

  Value value(const Element& x) const;
  long order(const Element& x) const;
  Residue residue(const Element& x) const;
  UnitPart<Element> unit_part(const Element& x) const;
  /// pi^m; the canonical uniformizer is pi for finite places and 1/t at infinity.
  Element uniformizer_power(long m) const;
  /// Canonical section of the residue map (constants for degree-one places).
  Element lift(const Residue& r) const;

  Element zero() const { return Element(proto_); }
  Element one() const { return Element::constant(proto_.one_like()); }
  Element variable() const { return Element::variable(proto_); }
  Residue residue_zero() const;
  bool residue_field_is_finite() const { return std::is_same_v<K, GF>; }

  std::string format(const Element& x) const { return x.to_string("t"); }
  std::string format_residue(const Residue& r) const { return r.to_string(); }
  std::string residue_field_name() const;
  std::string base_field_name() const;
  std::string describe() const;

  /// Image of t in the residue field (finite places only).
  const std::optional<Residue>& t_image() const { return t_image_; }

 private:
  long poly_order(const Poly& f) const;
  Residue residue_of_poly(const Poly& f) const;
  Residue embed_constant(const K& c) const;
  void build_residue_field();

  K proto_;
  std::optional<Poly> place_;
  std::optional<Residue> t_image_;
  // F_q with q = p^d, d > 1, and deg(place) > 1: image of the constant
  // generator u, and the F_p-linear inverse of the residue map on
  // F_q[t]_{<deg place}.
  std::optional<Residue> u_image_;
  std::vector<std::vector<std::uint64_t>> lift_matrix_;
};

extern template class PlaceValuation<Rational>;
extern template class PlaceValuation<GF>;

using QtPlace = PlaceValuation<Rational>;
using FqtPlace = PlaceValuation<GF>;

static_assert(DiscreteValuation<PAdicValuation>);
static_assert(DiscreteValuation<QtPlace>);
static_assert(DiscreteValuation<FqtPlace>);

}  // namespace conicval
