#pragma once

#include <utility>
#include <vector>

#include "conicval/finite_field.hpp"
#include "conicval/polynomial.hpp"
#include "conicval/rational.hpp"

namespace conicval {

/// unit * prod f_i^{e_i} with monic, pairwise distinct irreducible f_i
/// sorted by (degree, coefficients).
template <class K>
struct Factorization {
  K unit;
  std::vector<std::pair<Polynomial<K>, unsigned>> factors;
};

/// Rabin's irreducibility test over a finite field.
bool is_irreducible(const Polynomial<GF>& f);

/// Squarefree decomposition, distinct-degree and Cantor-Zassenhaus
/// equal-degree splitting. Deterministic (fixed internal seed).
Factorization<GF> factor(const Polynomial<GF>& f);

/// Distinct roots in the coefficient field, ascending by enumeration index.
std::vector<GF> roots(const Polynomial<GF>& f);

/// Largest degree accepted by factorization over Q.
inline constexpr int kMaxRationalFactorDegree = 8;

/// Content, squarefree decomposition, then Zassenhaus (modular factorization,
/// Hensel lifting, subset recombination). Inputs of degree above
/// kMaxRationalFactorDegree raise DegreeTooLarge.
Factorization<Rational> factor(const Polynomial<Rational>& f);

bool is_irreducible(const Polynomial<Rational>& f);

/// Yun's squarefree decomposition over Q: pairs (g_i, i) with f = lc * prod g_i^i.
std::vector<std::pair<Polynomial<Rational>, unsigned>> squarefree_decomposition(const Polynomial<Rational>& f);

}  // namespace conicval
