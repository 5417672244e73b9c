#include "conicval/valuation.hpp"

#include "conicval/error.hpp"
#include "conicval/integer.hpp"

namespace conicval {

// ---------------------------------------------------------------------------
// p-adic valuation on Q

PAdicValuation::PAdicValuation(std::uint64_t p) : p_(p) {
  if (p == 2) {
    throw UsageError("dyadic valuation rejected: the residue field must have characteristic different from 2");
  }
  ctx_ = GFContext::prime(p);
}

long PAdicValuation::order(const Rational& x) const {
  if (x.is_zero()) raise(Errc::ZeroInput, "valuation of 0 is infinite");
  mpz_class n = x.numerator(), d = x.denominator();
  const mpz_class p(static_cast<unsigned long>(p_));
  return static_cast<long>(remove_factor(n, p)) - static_cast<long>(remove_factor(d, p));
}

Value PAdicValuation::value(const Rational& x) const {
  if (x.is_zero()) return Value::infinity();
  return Value::integer(order(x));
}

GF PAdicValuation::residue(const Rational& x) const {
  if (x.is_zero()) return residue_zero();
  const long m = order(x);
  if (m < 0) raise(Errc::NegativeValue, "residue of " + x.to_string() + " with negative value");
  if (m > 0) return residue_zero();
  return GF::from_integer(ctx_, x.numerator()) / GF::from_integer(ctx_, x.denominator());
}

UnitPart<Rational> PAdicValuation::unit_part(const Rational& x) const {
  const long m = order(x);
  return {m, x * uniformizer_power(-m)};
}

Rational PAdicValuation::uniformizer_power(long m) const {
  return Rational(static_cast<long>(p_)).pow(m);
}

Rational PAdicValuation::lift(const GF& r) const {
  if (!same_context(r.context(), ctx_)) raise(Errc::ContextMismatch, "residue from another field");
  return Rational(static_cast<long>(r.coefficients()[0]));
}

// ---------------------------------------------------------------------------
// Places of k(t)

namespace {

// Inverse of a square matrix over F_p (rows of columns-major data irrelevant:
// m[r][c]). Throws if singular.
std::vector<std::vector<std::uint64_t>> invert_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::uint64_t>> inv(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) raise(Errc::Unreachable, "residue embedding is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const std::uint64_t s = powmod(m[col][col], p - 2, p);
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] = mulmod(m[col][c], s, p);
      inv[col][c] = mulmod(inv[col][c], s, p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const std::uint64_t f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] = (m[r][c] + p - mulmod(f, m[col][c], p)) % p;
        inv[r][c] = (inv[r][c] + p - mulmod(f, inv[col][c], p)) % p;
      }
    }
  }
  return inv;
}

}  // namespace

template <class K>
PlaceValuation<K>::PlaceValuation(const K& proto) : proto_(proto.zero_like()) {}

template <class K>
PlaceValuation<K>::PlaceValuation(const Poly& place) : proto_(place.zero_elem()), place_(place) {
  if (place.degree() < 1) throw UsageError("a place must be a nonconstant polynomial");
  if (!place.is_monic()) throw UsageError("a place must be given by a monic polynomial");
  if constexpr (std::is_same_v<K, Rational>) {
    if (place.degree() != 1) {
      raise(Errc::UnsupportedPlace, "only places of degree 1 (and infinity) are supported on Q(t)");
    }
  } else {
    if (!is_irreducible(place)) throw UsageError("place polynomial is not irreducible");
  }
  build_residue_field();
}

template <class K>
void PlaceValuation<K>::build_residue_field() {
  const Poly& pi = *place_;
  if constexpr (std::is_same_v<K, Rational>) {
    t_image_ = -pi.coeff(0);
  } else {
    const auto& base = proto_.context();
    const int e = pi.degree();
    if (e == 1) {
      t_image_ = -pi.coeff(0);
      return;
    }
    const auto p = base->characteristic();
    if (base->is_prime_field()) {
      std::vector<std::uint64_t> m;
      for (const auto& c : pi.coefficients()) m.push_back(c.coefficients()[0]);
      auto kappa = GFContext::extension(p, std::move(m));
      t_image_ = GF::generator(kappa);
      return;
    }
    const int d = base->degree();
    mpz_class order;
    mpz_ui_pow_ui(order.get_mpz_t(), p, static_cast<unsigned long>(d * e));
    auto kappa = GFContext::of_order(order);
    // Embed F_q = F_p[u]/(m) via a root of m, then pick a root of pi.
    std::vector<GF> mcoeffs;
    for (auto c : base->modulus()) mcoeffs.emplace_back(kappa, static_cast<std::int64_t>(c));
    auto mroots = roots(Polynomial<GF>(mcoeffs, GF(kappa, 0)));
    if (mroots.empty()) raise(Errc::Unreachable, "constant field does not embed");
    u_image_ = mroots.front();
    std::vector<GF> picoeffs;
    for (const auto& c : pi.coefficients()) picoeffs.push_back(embed_constant(c));
    auto piroots = roots(Polynomial<GF>(picoeffs, GF(kappa, 0)));
    if (piroots.empty()) raise(Errc::Unreachable, "place has no root in its residue field");
    t_image_ = piroots.front();
    const std::size_t n = static_cast<std::size_t>(d * e);
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
    GF tpow = GF(kappa, 1);
    for (int i = 0; i < e; ++i) {
      GF upow = GF(kappa, 1);
      for (int j = 0; j < d; ++j) {
        GF img = tpow * upow;
        const std::size_t col = static_cast<std::size_t>(i * d + j);
        for (std::size_t r = 0; r < n; ++r) m[r][col] = img.coefficients()[r];
        upow *= *u_image_;
      }
      tpow *= *t_image_;
    }
    lift_matrix_ = invert_mod_p(std::move(m), p);
  }
}

template <class K>
typename PlaceValuation<K>::Residue PlaceValuation<K>::embed_constant(const K& c) const {
  if constexpr (std::is_same_v<K, Rational>) {
    return c;
  } else {
    if (!u_image_) {
      if (t_image_ && !same_context(t_image_->context(), c.context())) {
        return GF(t_image_->context(), static_cast<std::int64_t>(c.coefficients()[0]));
      }
      return c;
    }
    GF acc = GF(u_image_->context(), 0);
    GF upow = GF(u_image_->context(), 1);
    for (auto x : c.coefficients()) {
      acc += GF(u_image_->context(), static_cast<std::int64_t>(x)) * upow;
      upow *= *u_image_;
    }
    return acc;
  }
}

template <class K>
typename PlaceValuation<K>::Residue PlaceValuation<K>::residue_zero() const {
  if constexpr (std::is_same_v<K, Rational>) {
    return Rational();
  } else {
    if (t_image_) return t_image_->zero_like();
    return proto_.zero_like();
  }
}

template <class K>
long PlaceValuation<K>::poly_order(const Poly& f) const {
  long n = 0;
  Poly g = f;
  for (;;) {
    auto [q, r] = g.divmod(*place_);
    if (!r.is_zero()) return n;
    g = std::move(q);
    ++n;
  }
}

template <class K>
long PlaceValuation<K>::order(const Element& x) const {
  if (x.is_zero()) raise(Errc::ZeroInput, "valuation of 0 is infinite");
  if (!place_) return static_cast<long>(x.den().degree()) - x.num().degree();
  return poly_order(x.num()) - poly_order(x.den());
}

template <class K>
Value PlaceValuation<K>::value(const Element& x) const {
  if (x.is_zero()) return Value::infinity();
  return Value::integer(order(x));
}

template <class K>
typename PlaceValuation<K>::Residue PlaceValuation<K>::residue_of_poly(const Poly& f) const {
  Residue acc = residue_zero();
  for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) {
    acc = acc * *t_image_ + embed_constant(*it);
  }
  return acc;
}

template <class K>
typename PlaceValuation<K>::Residue PlaceValuation<K>::residue(const Element& x) const {
  if (x.is_zero()) return residue_zero();
  const long m = order(x);
  if (m < 0) raise(Errc::NegativeValue, "residue of " + format(x) + " with negative value");
  if (m > 0) return residue_zero();
  if (!place_) return x.num().leading() / x.den().leading();
  return residue_of_poly(x.num()) / residue_of_poly(x.den());
}

template <class K>
typename PlaceValuation<K>::Element PlaceValuation<K>::uniformizer_power(long m) const {
  if (!place_) return Element(Poly::monomial(proto_.one_like(), 1)).pow(-m);
  return Element(*place_).pow(m);
}

template <class K>
UnitPart<typename PlaceValuation<K>::Element> PlaceValuation<K>::unit_part(const Element& x) const {
  const long m = order(x);
  return {m, x * uniformizer_power(-m)};
}

template <class K>
typename PlaceValuation<K>::Element PlaceValuation<K>::lift(const Residue& r) const {
  if constexpr (std::is_same_v<K, Rational>) {
    return Element::constant(r);
  } else {
    if (!place_ || place_->degree() == 1) return Element::constant(r);
    if (!u_image_) {
      // residue field F_p[u]/(pi): u^i lifts to t^i
      std::vector<GF> coeffs;
      for (auto c : r.coefficients()) coeffs.emplace_back(proto_.context(), static_cast<std::int64_t>(c));
      return Element(Poly(std::move(coeffs), proto_));
    }
    const auto& base = proto_.context();
    const auto p = base->characteristic();
    const std::size_t d = static_cast<std::size_t>(base->degree());
    const std::size_t n = lift_matrix_.size();
    std::vector<std::uint64_t> x(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) x[i] = (x[i] + mulmod(lift_matrix_[i][j], r.coefficients()[j], p)) % p;
    }
    std::vector<GF> coeffs;
    for (std::size_t i = 0; i < n / d; ++i) {
      coeffs.emplace_back(base, std::vector<std::uint64_t>(x.begin() + static_cast<long>(i * d),
                                                           x.begin() + static_cast<long>((i + 1) * d)));
    }
    return Element(Poly(std::move(coeffs), proto_));
  }
}

template <class K>
std::string PlaceValuation<K>::residue_field_name() const {
  if constexpr (std::is_same_v<K, Rational>) {
    return "Q";
  } else {
    return residue_zero().context()->describe();
  }
}

template <class K>
std::string PlaceValuation<K>::base_field_name() const {
  if constexpr (std::is_same_v<K, Rational>) {
    return "Q(t)";
  } else {
    const auto& ctx = proto_.context();
    std::string s = "Fq(t):q=" + ctx->order().get_str();
    if (!ctx->is_prime_field()) {
      auto base = GFContext::prime(ctx->characteristic());
      std::vector<GF> m;
      for (auto c : ctx->modulus()) m.emplace_back(base, static_cast<std::int64_t>(c));
      s += ",mod=" + Polynomial<GF>(m, GF(base, 0)).to_string("u");
    }
    return s;
  }
}

template <class K>
std::string PlaceValuation<K>::describe() const {
  std::string place = place_ ? place_->to_string("t") : "inf";
  std::string base = base_field_name();
  auto colon = base.find(':');
  if (colon == std::string::npos) return base + ":place=" + place;
  return base + ",place=" + place;
}

template class PlaceValuation<Rational>;
template class PlaceValuation<GF>;

}  // namespace conicval
