#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "conicval/gauss.hpp"
#include "conicval/quaternion.hpp"

namespace conicval {

/// Which of v(a), v(b), v(ab) are even: only a, only b, only ab, or all.
enum class CaseTag { Case1Index4, Case2A, Case2B, Case2AB, Case3Units };

inline const char* to_string(CaseTag c) {
  switch (c) {
    case CaseTag::Case1Index4:
      return "case1_index4";
    case CaseTag::Case2A:
      return "case2_a";
    case CaseTag::Case2B:
      return "case2_b";
    case CaseTag::Case2AB:
      return "case2_ab";
    case CaseTag::Case3Units:
      return "case3_units";
  }
  return "?";
}

/// f + g*s in F = E(x)(s), s^2 = a x^2 + b.
template <class E>
struct ConicElement {
  RationalFunction<E> f;
  RationalFunction<E> g;
};

/// Residue field of w*: either kappa(r) with zbar expressed in r, or the
/// function field kappa(T)(S) of the residue conic S^2 = a0bar T^2 + b0bar.
/// zbar always denotes the residue of a x^2 / b.
template <DiscreteValuation V>
struct ResidueFieldDesc {
  using E = typename V::Element;
  using R = typename V::Residue;
  using RF = RationalFunction<R>;

  bool conic = false;
  std::string kappa;

  // rational variant
  std::optional<RF> zbar_in_r;
  std::optional<E> unit;
  std::optional<R> unit_residue;
  std::string generator;  // the element whose residue is the generator

  // conic variant
  std::optional<E> a0, b0, u, nu;
  std::optional<R> a0bar, b0bar;

  std::vector<std::string> generators() const {
    return conic ? std::vector<std::string>{"T", "S"} : std::vector<std::string>{"r"};
  }
};

/// An element A + B*S of the residue field (B = 0 in the rational variant,
/// where A is a function of r).
template <class R>
struct WResidue {
  RationalFunction<R> A;
  RationalFunction<R> B;

  friend bool operator==(const WResidue&, const WResidue&) = default;
};

/// The unique extension w* to F of the Gauss extension of v on E(x^2) with
/// respect to a x^2 / b.
template <DiscreteValuation V>
class DistinguishedExtension {
 public:
  using E = typename V::Element;
  using R = typename V::Residue;
  using EX = RationalFunction<E>;
  using RF = RationalFunction<R>;
  using Elem = ConicElement<E>;

  DistinguishedExtension(V v, E a, E b)
      : v_(std::move(v)),
        a_(std::move(a)),
        b_(std::move(b)),
        w1_(GaussExtension<V>::with_pivot(v_, EX(Polynomial<E>::monomial(a_ / b_, 1)))),
        zbar_(v_.residue_zero()),
        relation_(v_.residue_zero()) {
    if (a_.is_zero() || b_.is_zero()) raise(Errc::ZeroInput, "conic entries must be nonzero");
    va_ = v_.order(a_);
    vb_ = v_.order(b_);
    const bool ea = va_ % 2 == 0, eb = vb_ % 2 == 0, eab = (va_ + vb_) % 2 == 0;
    if (ea && eb) {
      tag_ = CaseTag::Case3Units;
    } else if (ea) {
      tag_ = CaseTag::Case2A;
    } else if (eb) {
      tag_ = CaseTag::Case2B;
    } else if (eab) {
      tag_ = CaseTag::Case2AB;
    } else {
      raise(Errc::Unreachable, "index 4 cannot occur for a discrete valuation");
    }
    twice_beta_ = {0, vb_ - va_, vb_, 2 * vb_ - va_};
    build_residue_field();
  }

  const V& valuation() const { return v_; }
  const E& a() const { return a_; }
  const E& b() const { return b_; }
  CaseTag case_tag() const { return tag_; }
  /// The Gauss extension on E(x^2) = E(Z), in the variable Z = x^2.
  const GaussExtension<V>& w1() const { return w1_; }
  const ResidueFieldDesc<V>& residue_field() const { return desc_; }

  ValueGroup value_group() const {
    for (auto r : coset_representatives()) {
      if (!r.is_integer()) return ValueGroup::half_integers();
    }
    return ValueGroup::integers();
  }

  /// {0, v(a)/2, v(b)/2, v(ab)/2} reduced into [0, 1).
  std::array<Value, 4> coset_representatives() const {
    auto red = [](long twice) { return Value::halves(((twice % 2) + 2) % 2); };
    return {red(0), red(va_), red(vb_), red(va_ + vb_)};
  }

  /// Basis element attaining each coset representative: 1, xs, s, x.
  static constexpr std::array<const char*, 4> kCosetWitness{"1", "x*s", "s", "x"};

  Elem one() const { return {EX::constant(v_.one()), EX(v_.zero())}; }
  Elem x() const { return {EX::variable(v_.zero()), EX(v_.zero())}; }
  Elem s() const { return {EX(v_.zero()), EX::constant(v_.one())}; }
  Elem xs() const { return {EX(v_.zero()), EX::variable(v_.zero())}; }
  Elem from_base(const E& c) const { return {EX::constant(c), EX(v_.zero())}; }

  EX conic_polynomial() const {
    return EX(Polynomial<E>(std::vector<E>{b_, v_.zero(), a_}, v_.zero()));
  }

  Elem add(const Elem& p, const Elem& q) const { return {p.f + q.f, p.g + q.g}; }
  Elem sub(const Elem& p, const Elem& q) const { return {p.f - q.f, p.g - q.g}; }
  Elem mul(const Elem& p, const Elem& q) const {
    return {p.f * q.f + p.g * q.g * conic_polynomial(), p.f * q.g + p.g * q.f};
  }
  Elem conjugate(const Elem& p) const { return {p.f, -p.g}; }
  /// f^2 - g^2 (a x^2 + b), an element of E(x).
  EX norm(const Elem& p) const { return p.f * p.f - p.g * p.g * conic_polynomial(); }
  bool is_zero(const Elem& p) const { return p.f.is_zero() && p.g.is_zero(); }

  /// (e0, e1, e2, e3) in E(Z) with p = e0 + e1 x + e2 s + e3 xs, Z = x^2.
  std::array<EX, 4> decompose(const Elem& p) const {
    auto [e0, e1] = split_parity(p.f);
    auto [e2, e3] = split_parity(p.g);
    return {e0, e1, e2, e3};
  }

  /// Graded minimum over the basis (1, x, s, xs).
  Value value(const Elem& p) const {
    auto [f0, f1, fd] = split_parity_raw(p.f);
    auto [g0, g1, gd] = split_parity_raw(p.g);
    const std::array<const Polynomial<E>*, 4> nums{&f0, &f1, &g0, &g1};
    const std::array<const Polynomial<E>*, 4> dens{&fd, &fd, &gd, &gd};
    Value best = Value::infinity();
    for (std::size_t i = 0; i < 4; ++i) {
      if (nums[i]->is_zero()) continue;
      best = std::min(best, Value::integer(w1_.order_of_fraction(*nums[i], *dens[i])) + Value::halves(twice_beta_[i]));
    }
    return best;
  }

  Value value(const EX& h) const { return value(Elem{h, EX(v_.zero())}); }

  /// Residue of a value-0 element in the generators of residue_field().
  WResidue<R> residue(const Elem& p) const {
    if (is_zero(p)) raise(Errc::NonzeroValue, "residue of 0 requested");
    const Value val = value(p);
    if (val != Value::integer(0)) raise(Errc::NonzeroValue, "element has value " + val.to_string() + ", not 0");
    auto [f0, f1, fd] = split_parity_raw(p.f);
    auto [g0, g1, gd] = split_parity_raw(p.g);
    const std::array<const Polynomial<E>*, 4> nums{&f0, &f1, &g0, &g1};
    const std::array<const Polynomial<E>*, 4> dens{&fd, &fd, &gd, &gd};
    WResidue<R> out{rzero(), rzero()};
    for (std::size_t i = 0; i < 4; ++i) {
      if (nums[i]->is_zero() || !image_[i]) continue;
      const long o = w1_.order_of_fraction(*nums[i], *dens[i]);
      if (Value::integer(o) + Value::halves(twice_beta_[i]) != Value::integer(0)) continue;
      RF c = w1_.residue_of_fraction(*scale_[i] * *nums[i], *dens[i]).compose(zbar_);
      out = residue_add(out, residue_mul({c, rzero()}, *image_[i]));
    }
    return out;
  }

  WResidue<R> residue_add(const WResidue<R>& p, const WResidue<R>& q) const { return {p.A + q.A, p.B + q.B}; }
  WResidue<R> residue_mul(const WResidue<R>& p, const WResidue<R>& q) const {
    return {p.A * q.A + p.B * q.B * relation_, p.A * q.B + p.B * q.A};
  }

  /// a0bar T^2 + b0bar (conic variant), as a rational function of T.
  const RF& conic_relation() const { return relation_; }

  std::string format_residue(const WResidue<R>& r) const {
    const std::string var = desc_.conic ? "T" : "r";
    if (r.B.is_zero()) return r.A.to_string(var);
    std::string b = r.B.is_one() ? "S" : "(" + r.B.to_string(var) + ")*S";
    if (r.A.is_zero()) return b;
    return "(" + r.A.to_string(var) + ") + " + b;
  }

  std::string format(const EX& h) const { return w1_.format(h); }
  std::string format(const Elem& p) const {
    std::string f = format(p.f), g = format(p.g);
    if (p.g.is_zero()) return f;
    std::string gs = "(" + g + ")*s";
    if (p.f.is_zero()) return gs;
    return "(" + f + ") + " + gs;
  }

  /// Relation satisfied by the generators, e.g. "S^2 = -T^2 - 1" or "z = r^2 - 1".
  std::string relation_text() const {
    if (desc_.conic) return "S^2 = " + relation_.to_string("T");
    return "z = " + desc_.zbar_in_r->to_string("r");
  }

 private:
  static std::pair<EX, EX> split_parity(const EX& h) {
    auto [even, odd, delta] = split_parity_raw(h);
    return {EX(even, delta), EX(odd, delta)};
  }

  // h = (even(Z) + x odd(Z)) / delta(Z) with Z = x^2, unreduced
  static std::tuple<Polynomial<E>, Polynomial<E>, Polynomial<E>> split_parity_raw(const EX& h) {
    Polynomial<E> dm = h.den().reflected();
    Polynomial<E> m = h.num() * dm;
    return {m.decimated(0, 2), m.decimated(1, 2), (h.den() * dm).decimated(0, 2)};
  }

  RF rzero() const { return RF(v_.residue_zero()); }
  RF rconst(const R& c) const { return RF::constant(c); }

  void build_residue_field() {
    const R rz = v_.residue_zero();
    const R rone = v_.residue(v_.one());
    const RF var = RF::variable(rz);
    desc_.kappa = v_.residue_field_name();
    relation_ = rzero();
    auto pi_half = [&](long twice_order) { return v_.uniformizer_power(-twice_order / 2); };
    WResidue<R> one_img{rconst(rone), rzero()};
    switch (tag_) {
      case CaseTag::Case3Units: {
        const E u = pi_half(va_), nu = pi_half(vb_);
        desc_.conic = true;
        desc_.u = u;
        desc_.nu = nu;
        desc_.a0 = a_ * u * u;
        desc_.b0 = b_ * nu * nu;
        desc_.a0bar = v_.residue(*desc_.a0);
        desc_.b0bar = v_.residue(*desc_.b0);
        relation_ = rconst(*desc_.a0bar) * var * var + rconst(*desc_.b0bar);
        zbar_ = rconst(*desc_.a0bar / *desc_.b0bar) * var * var;
        scale_ = {v_.one(), u / nu, nu.inverse(), u / (nu * nu)};
        image_ = {one_img, WResidue<R>{var, rzero()}, WResidue<R>{rzero(), rconst(rone)}, WResidue<R>{rzero(), var}};
        break;
      }
      case CaseTag::Case2B: {
        // r = res(nu s), r^2 = b0bar (zbar + 1)
        const E nu = pi_half(vb_);
        desc_.unit = b_ * nu * nu;
        desc_.generator = "nu*s with nu = " + v_.format(nu);
        desc_.unit_residue = v_.residue(*desc_.unit);
        zbar_ = var * var / rconst(*desc_.unit_residue) - rconst(rone);
        scale_ = {v_.one(), std::nullopt, nu.inverse(), std::nullopt};
        image_[0] = one_img;
        image_[2] = WResidue<R>{var, rzero()};
        check_parametrization(rconst(*desc_.unit_residue) * (zbar_ + rconst(rone)), var * var);
        break;
      }
      case CaseTag::Case2A: {
        // theta = x s a mu / b, theta^2 = u zbar (zbar + 1) with u = a mu^2; r = thetabar / zbar
        const E mu = pi_half(va_);
        desc_.unit = a_ * mu * mu;
        desc_.generator = "(x*s*a*mu/b)/z with mu = " + v_.format(mu);
        desc_.unit_residue = v_.residue(*desc_.unit);
        const RF ub = rconst(*desc_.unit_residue);
        zbar_ = ub / (var * var - ub);
        scale_ = {v_.one(), std::nullopt, std::nullopt, b_ / (a_ * mu)};
        image_[0] = one_img;
        image_[3] = WResidue<R>{var * zbar_, rzero()};
        check_parametrization(ub * zbar_ * (zbar_ + rconst(rone)), (var * zbar_) * (var * zbar_));
        break;
      }
      case CaseTag::Case2AB: {
        // theta = a lambda x, theta^2 = u zbar with u = a b lambda^2; r = thetabar
        const E lambda = pi_half(va_ + vb_);
        desc_.unit = a_ * b_ * lambda * lambda;
        desc_.generator = "a*lambda*x with lambda = " + v_.format(lambda);
        desc_.unit_residue = v_.residue(*desc_.unit);
        const RF ub = rconst(*desc_.unit_residue);
        zbar_ = var * var / ub;
        scale_ = {v_.one(), (a_ * lambda).inverse(), std::nullopt, std::nullopt};
        image_[0] = one_img;
        image_[1] = WResidue<R>{var, rzero()};
        check_parametrization(ub * zbar_, var * var);
        break;
      }
      case CaseTag::Case1Index4:
        raise(Errc::Unreachable, "index 4 cannot occur for a discrete valuation");
    }
    if (!desc_.conic) desc_.zbar_in_r = zbar_;
  }

  static void check_parametrization(const RF& lhs, const RF& rhs) {
    if (!(lhs == rhs)) raise(Errc::Unreachable, "residue parametrization failed its symbolic check");
  }

  V v_;
  E a_, b_;
  GaussExtension<V> w1_;
  long va_ = 0, vb_ = 0;
  CaseTag tag_ = CaseTag::Case3Units;
  std::array<long, 4> twice_beta_{};
  ResidueFieldDesc<V> desc_;
  RF zbar_;
  RF relation_;
  std::array<std::optional<E>, 4> scale_;
  std::array<std::optional<WResidue<R>>, 4> image_;
};

/// w*(elem), raising ZeroElement for 0.
template <DiscreteValuation V>
Value eval_w_star(const DistinguishedExtension<V>& ext, const ConicElement<typename V::Element>& elem) {
  if (ext.is_zero(elem)) raise(Errc::ZeroElement, "w* of 0 is infinite");
  return ext.value(elem);
}

/// A Gauss extension of v to E(x) whose residue field is rational over kappa.
template <DiscreteValuation V>
struct FamilyMember {
  using E = typename V::Element;
  using R = typename V::Residue;

  RationalFunction<E> pivot;
  E c;
  long vc;
  std::string constraint;
  QuadraticKind branch;
  /// (y, z0) with a0 z0^2 + b0 = y^2 mod the maximal ideal (split branch);
  /// absent for the point at infinity and in the ramified branch.
  std::optional<std::pair<E, E>> conic_point;
  bool at_infinity = false;
};

namespace detail {

/// z0 in kappa with a zbar0^2 + b nonzero square, units first, then 0.
inline std::optional<std::pair<GF, GF>> residue_conic_abscissa(const GF& a, const GF& b, long) {
  auto elems = enumerate_field(a.context());
  elems.push_back(elems.front());
  for (std::size_t i = 1; i < elems.size(); ++i) {
    GF val = a * elems[i] * elems[i] + b;
    if (val.is_zero()) continue;
    if (auto y = sqrt(val)) return std::pair{*y, elems[i]};
  }
  return std::nullopt;
}

inline std::optional<std::pair<Rational, Rational>> residue_conic_abscissa(const Rational& a, const Rational& b,
                                                                          long bound) {
  for (long h = 1; h <= bound; ++h) {
    for (long d = 1; d <= h; ++d) {
      for (long n = -h; n <= h; ++n) {
        if (n == 0 || std::max(std::labs(n), d) != h) continue;
        Rational z0 = Rational(n) / Rational(d);
        Rational val = a * z0 * z0 + b;
        if (val.is_zero()) continue;
        if (auto y = sqrt(val)) return std::pair{*y, z0};
      }
    }
  }
  if (auto y = sqrt(b)) return std::pair{*y, Rational()};
  return std::nullopt;
}

}  // namespace detail

/// n Gauss extensions of v to E(x), with distinct v(c), whose extensions to F
/// have rational residue fields. Branches on the given presentation: v(a) odd
/// uses c*x with 2v(c) > v(a) - v(b); v(a) even and v(b) odd uses c*x with
/// 2v(c) < v(a) - v(b); otherwise a point of the residue conic gives
/// c*((nu/u)x - z0) with v(c) < 0 (or c*(u/nu)/x from the point at infinity).
template <DiscreteValuation V>
std::vector<FamilyMember<V>> rational_residue_family(const V& v, const typename V::Element& a,
                                                     const typename V::Element& b, int count,
                                                     long bound = kDefaultSearchBound) {
  using E = typename V::Element;
  using EX = RationalFunction<E>;
  if (count < 0) throw UsageError("family size must be nonnegative");
  auto verdict = decide_unramified_extension(v, a, b, bound);
  if (verdict.kind == VerdictKind::UnramifiedExtension) {
    raise(Errc::PreconditionViolated, "v has an unramified extension to the quaternion algebra");
  }
  std::vector<FamilyMember<V>> out;
  if (count == 0) return out;
  const long va = v.order(a), vb = v.order(b);
  const E zero = v.zero();
  const EX x = EX::variable(zero);
  const EX f = EX(Polynomial<E>(std::vector<E>{b, zero, a}, zero));

  auto finish = [&](FamilyMember<V> m) {
    auto w = GaussExtension<V>::with_pivot(v, m.pivot);
    auto qa = quadratic_extension_analysis(w, f);
    if (qa.kind != m.branch) raise(Errc::Unreachable, "family member has an unexpected quadratic step");
    out.push_back(std::move(m));
  };

  if (va % 2 != 0 || vb % 2 != 0) {
    const bool above = va % 2 != 0;
    const long diff = va - vb;
    // smallest m with 2m > diff, or largest m with 2m < diff
    const long start = above ? detail::floor_half(diff) + 1 : -detail::floor_half(-diff) - 1;
    for (int k = 0; k < count; ++k) {
      const long m = above ? start + k : start - k;
      const E c = v.uniformizer_power(m);
      finish({EX::constant(c) * x, c, m, above ? "2v(c) > v(a) - v(b)" : "2v(c) < v(a) - v(b)",
              QuadraticKind::Ramified, std::nullopt, false});
    }
    return out;
  }

  const E u = v.uniformizer_power(-va / 2), nu = v.uniformizer_power(-vb / 2);
  const E a0 = a * u * u, b0 = b * nu * nu;
  const auto a0bar = v.residue(a0), b0bar = v.residue(b0);
  auto point = detail::residue_conic_abscissa(a0bar, b0bar, bound);
  const bool infinity = !point.has_value();
  if (infinity && !is_square(a0bar)) {
    raise(Errc::WitnessNotFound, "no point on the residue conic within the search bound");
  }
  const EX xprime = EX::constant(nu / u) * x;
  for (int k = 0; k < count; ++k) {
    const long m = -1 - k;
    const E c = v.uniformizer_power(m);
    FamilyMember<V> mem{EX(zero), c, m, "v(c) < 0", QuadraticKind::SplitPair, std::nullopt, infinity};
    if (infinity) {
      mem.pivot = EX::constant(c) / xprime;
    } else {
      const E y = v.lift(point->first), z0 = v.lift(point->second);
      mem.pivot = EX::constant(c) * (xprime - EX::constant(z0));
      mem.conic_point = std::pair{y, z0};
    }
    finish(std::move(mem));
  }
  return out;
}

template <DiscreteValuation V>
struct AnalysisReport {
  bool present;
  ExtensionVerdict<V> verdict;
  DistinguishedExtension<V> extension;
  std::vector<FamilyMember<V>> family;
  std::vector<std::string> warnings;
};

/// Full analysis of (a,b) at v: the verdict, w*, and when w* is not the
/// distinguished non-ruled extension, a sample of the rational family.
template <DiscreteValuation V>
AnalysisReport<V> analyze(const V& v, const typename V::Element& a, const typename V::Element& b,
                          int family_count = 3, long bound = kDefaultSearchBound) {
  auto verdict = decide_unramified_extension(v, a, b, bound);
  DistinguishedExtension<V> ext(v, a, b);
  AnalysisReport<V> rep{verdict.kind == VerdictKind::UnramifiedExtension, verdict, ext, {}, {}};
  if (is_square(b)) rep.warnings.push_back("RationalFieldWarning: b is a square, so F is rational and Q is split");
  if (rep.present) {
    if (ext.value_group() != ValueGroup::integers()) raise(Errc::Unreachable, "present case with ramified w*");
    const auto& d = ext.residue_field();
    if (!d.conic) raise(Errc::Unreachable, "present case with a rational residue field");
    if (detail::residue_split(*d.a0bar, *d.b0bar, bound).split) {
      raise(Errc::Unreachable, "present case with a split residue conic");
    }
  } else {
    try {
      rep.family = rational_residue_family(v, a, b, family_count, bound);
    } catch (const MathError& e) {
      if (e.code() != Errc::WitnessNotFound) throw;
      rep.warnings.push_back(e.what());
    }
  }
  for (const auto& d : verdict.diagnostics) rep.warnings.push_back(d);
  return rep;
}

}  // namespace conicval
