#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "conicval/rational.hpp"

namespace conicval {

/// A place of Q: an odd prime, 2, or the real place.
struct QPlace {
  mpz_class prime;  // 0 for the real place

  static QPlace real() { return {mpz_class(0)}; }
  static QPlace at(const mpz_class& p) { return {p}; }
  bool is_real() const { return prime == 0; }
  std::string to_string() const { return is_real() ? "inf" : prime.get_str(); }
  friend bool operator==(const QPlace&, const QPlace&) = default;
};

/// Hilbert symbol (a,b)_place for nonzero rationals; +1 iff z^2 = a x^2 + b y^2
/// has a nontrivial solution over the completion. `place` must be real or prime.
int hilbert_symbol(const Rational& a, const Rational& b, const QPlace& place);

/// inf, 2 and every odd prime dividing a numerator or denominator, ascending.
std::vector<QPlace> relevant_places(const std::vector<Rational>& entries);

/// Places where (a,b)_Q ramifies.
std::vector<QPlace> ramified_places(const Rational& a, const Rational& b);

/// Whether (a1,b1)_Q and (a2,b2)_Q are isomorphic: same ramification.
bool quaternion_isomorphic(const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2);

}  // namespace conicval
