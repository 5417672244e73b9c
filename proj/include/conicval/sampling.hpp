#pragma once

#include <random>

#include "conicval/valuation.hpp"

namespace conicval {

/// Random generators for fuzzing. Heights and degrees are small so that
/// exact arithmetic stays cheap; every draw is a pure function of the RNG state.
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// n/d with |n| <= height, 1 <= d <= height.
inline Rational random_rational(Rng& rng, long height) {
  return Rational(mpz_class(uniform(rng, -height, height)), mpz_class(uniform(rng, 1, height)));
}

inline GF random_gf(Rng& rng, const GFContextPtr& ctx) {
  const auto q = ctx->order().get_ui();
  return GF::from_index(ctx, static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long>(q) - 1)));
}

inline Rational random_constant(Rng& rng, const Rational&) { return random_rational(rng, 9); }
inline GF random_constant(Rng& rng, const GF& proto) { return random_gf(rng, proto.context()); }

template <class K>
Polynomial<K> random_polynomial(Rng& rng, const K& proto, int max_degree) {
  std::vector<K> cs;
  const long d = uniform(rng, 0, max_degree);
  for (long i = 0; i <= d; ++i) cs.push_back(random_constant(rng, proto));
  return Polynomial<K>(std::move(cs), proto.zero_like());
}

template <class K>
Polynomial<K> random_monic(Rng& rng, const K& proto, int max_degree) {
  auto p = random_polynomial(rng, proto, max_degree - 1);
  return p + Polynomial<K>::monomial(proto.one_like(), static_cast<std::size_t>(p.degree() + 1));
}

/// A random element of the base field of v, nonzero, with value spread over [-2, 2].
inline Rational random_scalar(Rng& rng, const PAdicValuation& v) {
  Rational r;
  while (r.is_zero()) r = random_rational(rng, 30);
  return r * v.uniformizer_power(uniform(rng, -2, 2));
}

template <class K>
RationalFunction<K> random_scalar(Rng& rng, const PlaceValuation<K>& v) {
  const K proto = v.constant_proto();
  for (;;) {
    RationalFunction<K> r(random_polynomial(rng, proto, 2), random_monic(rng, proto, 1));
    if (!r.is_zero()) return r * v.uniformizer_power(uniform(rng, -2, 2));
  }
}

/// A random polynomial in x with coefficients from random_scalar, some zero.
template <class V>
Polynomial<typename V::Element> random_coefficient_polynomial(Rng& rng, const V& v, int max_degree) {
  using E = typename V::Element;
  std::vector<E> cs;
  const long d = uniform(rng, 0, max_degree);
  for (long i = 0; i <= d; ++i) cs.push_back(uniform(rng, 0, 4) == 0 ? v.zero() : random_scalar(rng, v));
  if (cs.back().is_zero()) cs.back() = random_scalar(rng, v);
  return Polynomial<E>(std::move(cs), v.zero());
}

/// A random nonzero element of E(x) with numerator degree <= 2 and denominator degree <= 1.
template <class V>
RationalFunction<typename V::Element> random_function(Rng& rng, const V& v) {
  using E = typename V::Element;
  auto num = random_coefficient_polynomial(rng, v, 2);
  auto den = random_coefficient_polynomial(rng, v, 1);
  return RationalFunction<E>(num, den);
}

}  // namespace conicval
