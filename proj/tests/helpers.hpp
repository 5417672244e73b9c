#pragma once

#include <initializer_list>
#include <vector>

#include "conicval/rational_function.hpp"

namespace testutil {

using conicval::GF;
using conicval::GFContextPtr;
using conicval::Polynomial;
using conicval::Rational;
using conicval::RationalFunction;

inline Rational q(long n, long d = 1) { return Rational(n) / Rational(d); }

inline Polynomial<Rational> qpoly(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return Polynomial<Rational>(v, Rational());
}

inline Polynomial<GF> fpoly(const GFContextPtr& ctx, std::initializer_list<long> cs) {
  std::vector<GF> v;
  for (long c : cs) v.emplace_back(ctx, c);
  return Polynomial<GF>(v, GF(ctx, 0));
}

using QRF = RationalFunction<Rational>;
using QtElem = RationalFunction<Rational>;
using QtX = RationalFunction<QtElem>;

/// Element of Q(t) from coefficient lists of numerator and denominator.
inline QRF qrf(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
  return QRF(qpoly(num), qpoly(den));
}

/// Polynomial in x over a field E given as coefficient elements.
template <class E>
RationalFunction<E> xpoly(std::vector<E> cs) {
  E zero = cs.front().zero_like();
  return RationalFunction<E>(Polynomial<E>(std::move(cs), zero));
}

template <class E>
RationalFunction<E> xrf(std::vector<E> num, std::vector<E> den) {
  E zero = num.front().zero_like();
  return RationalFunction<E>(Polynomial<E>(std::move(num), zero), Polynomial<E>(std::move(den), zero));
}

}  // namespace testutil
