#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conicval/gauss.hpp"
#include "conicval/hilbert.hpp"
#include "conicval/valuation.hpp"

namespace conicval {

inline constexpr long kDefaultSearchBound = 200;

/// A local invariant (+1 or -1) at a named place.
struct LocalSymbol {
  std::string place;
  int symbol;
};

/// Splitting of (a,b) over a field K. `point` is (x, y, z) != 0 with
/// a x^2 + b y^2 = z^2 when one was found.
template <class K>
struct SplitResult {
  bool split = false;
  std::optional<std::array<K, 3>> point;
  std::vector<LocalSymbol> symbols;
};

/// Finite field: always split; the point is the first (y outer, x inner, both
/// in enumeration order) with a x^2 + b y^2 a square, z the smaller root.
SplitResult<GF> is_split(const GF& a, const GF& b);

/// Q: decided by Hilbert symbols; a point of height <= bound is attached when split.
SplitResult<Rational> is_split(const Rational& a, const Rational& b, long bound = kDefaultSearchBound);

/// F_q(t): split iff the tame symbol is +1 at every place dividing a, b and at infinity.
SplitResult<RationalFunction<GF>> is_split(const RationalFunction<GF>& a, const RationalFunction<GF>& b);

/// Q(t) is not supported.
[[noreturn]] SplitResult<RationalFunction<Rational>> is_split(const RationalFunction<Rational>& a,
                                                               const RationalFunction<Rational>& b);

/// First point (x,y,z), y outer then x, over integer shells max(|x|,|y|) = 1..bound
/// ordered 0, 1, -1, 2, -2, ...
std::optional<std::array<Rational, 3>> find_rational_point(const Rational& a, const Rational& b, long bound);

/// Tame symbol ((-1)^(alpha beta) a^beta / b^alpha)bar read through the
/// quadratic character of the residue field.
int tame_symbol(const FqtPlace& v, const RationalFunction<GF>& a, const RationalFunction<GF>& b);

enum class Shape { UnitUnit, OddUnit };

inline const char* to_string(Shape s) { return s == Shape::UnitUnit ? "unit_unit" : "odd_unit"; }

enum class MoveKind { ScaleA, ScaleB, Swap, ReplaceBByMinusAB };

inline const char* to_string(MoveKind m) {
  switch (m) {
    case MoveKind::ScaleA:
      return "scale_a";
    case MoveKind::ScaleB:
      return "scale_b";
    case MoveKind::Swap:
      return "swap";
    case MoveKind::ReplaceBByMinusAB:
      return "b_to_minus_ab";
  }
  return "?";
}

/// One presentation move; scalings multiply the entry by factor^2.
template <class E>
struct Move {
  MoveKind kind;
  std::optional<E> factor;
};

template <class E>
struct NormalizedPresentation {
  E a;
  E b;
  Shape shape;
  std::vector<Move<E>> transcript;
};

template <class E>
std::pair<E, E> apply_move(const Move<E>& m, const E& a, const E& b) {
  switch (m.kind) {
    case MoveKind::ScaleA:
      return {a * *m.factor * *m.factor, b};
    case MoveKind::ScaleB:
      return {a, b * *m.factor * *m.factor};
    case MoveKind::Swap:
      return {b, a};
    case MoveKind::ReplaceBByMinusAB:
      return {a, -(a * b)};
  }
  raise(Errc::Unreachable, "unknown move");
}

template <class E>
std::pair<E, E> replay(const std::vector<Move<E>>& transcript, E a, E b) {
  for (const auto& m : transcript) std::tie(a, b) = apply_move(m, a, b);
  return {a, b};
}

namespace detail {

inline long floor_half(long n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

}  // namespace detail

/// Brings (a,b) to v(a) = v(b) = 0 or (v(a) odd, v(b) = 0) using square
/// scalings by uniformizer powers, the swap and b -> -ab.
template <DiscreteValuation V>
NormalizedPresentation<typename V::Element> normalize(const V& v, typename V::Element a, typename V::Element b) {
  using E = typename V::Element;
  if (a.is_zero() || b.is_zero()) raise(Errc::ZeroInput, "quaternion entries must be nonzero");
  NormalizedPresentation<E> out{a, b, Shape::UnitUnit, {}};
  auto push = [&](Move<E> m) {
    std::tie(out.a, out.b) = apply_move(m, out.a, out.b);
    out.transcript.push_back(std::move(m));
  };
  auto reduce = [&](MoveKind kind, const E& x) {
    const long k = detail::floor_half(v.order(x));
    if (k != 0) push({kind, v.uniformizer_power(-k)});
  };
  reduce(MoveKind::ScaleA, out.a);
  reduce(MoveKind::ScaleB, out.b);
  const long pa = v.order(out.a), pb = v.order(out.b);
  if (pa == 1 && pb == 1) {
    push({MoveKind::ReplaceBByMinusAB, std::nullopt});
    reduce(MoveKind::ScaleB, out.b);
  } else if (pa == 0 && pb == 1) {
    push({MoveKind::Swap, std::nullopt});
  }
  out.shape = v.order(out.a) == 0 ? Shape::UnitUnit : Shape::OddUnit;
  return out;
}

/// (abar, bbar) over kappa for a unit_unit presentation.
template <DiscreteValuation V>
std::pair<typename V::Residue, typename V::Residue> residue_algebra(const V& v, const typename V::Element& a,
                                                                    const typename V::Element& b) {
  auto n = normalize(v, a, b);
  if (n.shape != Shape::UnitUnit) raise(Errc::NotUnitUnit, "normalized presentation has v(a) odd");
  return {v.residue(n.a), v.residue(n.b)};
}

enum class VerdictKind { UnramifiedExtension, RamifiedOnly, NoExtensionSplitResidue, NoExtensionAlgebraSplit };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::UnramifiedExtension:
      return "unramified_extension";
    case VerdictKind::RamifiedOnly:
      return "ramified_only";
    case VerdictKind::NoExtensionSplitResidue:
      return "no_extension_split_residue";
    case VerdictKind::NoExtensionAlgebraSplit:
      return "no_extension_algebra_split";
  }
  return "?";
}

template <DiscreteValuation V>
struct ExtensionVerdict {
  using E = typename V::Element;
  using R = typename V::Residue;

  VerdictKind kind;
  NormalizedPresentation<E> normalized;
  /// Set when the algebra is known to be split over E.
  std::optional<std::string> global_split;
  std::optional<std::pair<R, R>> residue_algebra;
  std::optional<SplitResult<R>> residue_split;
  /// odd_unit shape: square root of bbar' when it exists.
  std::optional<R> residue_root;
  std::vector<std::string> diagnostics;
};

/// Certificate text when (a,b) is known to be split over the base field of v.
std::optional<std::string> known_global_split(const PAdicValuation& v, const Rational& a, const Rational& b);
std::optional<std::string> known_global_split(const QtPlace& v, const RationalFunction<Rational>& a,
                                              const RationalFunction<Rational>& b);
std::optional<std::string> known_global_split(const FqtPlace& v, const RationalFunction<GF>& a,
                                              const RationalFunction<GF>& b);

namespace detail {

inline SplitResult<GF> residue_split(const GF& a, const GF& b, long) { return is_split(a, b); }
inline SplitResult<Rational> residue_split(const Rational& a, const Rational& b, long bound) {
  return is_split(a, b, bound);
}

}  // namespace detail

template <DiscreteValuation V>
ExtensionVerdict<V> decide_unramified_extension(const V& v, const typename V::Element& a,
                                                const typename V::Element& b, long bound = kDefaultSearchBound) {
  ExtensionVerdict<V> out{VerdictKind::RamifiedOnly, normalize(v, a, b), std::nullopt, std::nullopt,
                          std::nullopt, std::nullopt, {}};
  const auto& n = out.normalized;
  if (n.shape == Shape::UnitUnit) {
    out.residue_algebra = std::pair{v.residue(n.a), v.residue(n.b)};
    out.residue_split = detail::residue_split(out.residue_algebra->first, out.residue_algebra->second, bound);
    if (!out.residue_split->split) {
      out.kind = VerdictKind::UnramifiedExtension;
    } else {
      out.kind = VerdictKind::NoExtensionSplitResidue;
      if (!out.residue_split->point) {
        out.diagnostics.push_back("WitnessNotFound: no point on the residue conic of height <= " +
                                  std::to_string(bound));
      }
    }
  } else {
    out.residue_root = sqrt(v.residue(n.b));
    out.kind = out.residue_root ? VerdictKind::NoExtensionSplitResidue : VerdictKind::RamifiedOnly;
  }
  out.global_split = known_global_split(v, a, b);
  if (out.global_split) {
    if (out.kind == VerdictKind::UnramifiedExtension) {
      raise(Errc::Unreachable, "split algebra with a division residue algebra");
    }
    out.kind = VerdictKind::NoExtensionAlgebraSplit;
  }
  return out;
}

}  // namespace conicval
