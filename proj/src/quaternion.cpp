#include "conicval/quaternion.hpp"

#include <algorithm>

#include "conicval/error.hpp"
#include "conicval/factor.hpp"
#include "conicval/integer.hpp"

namespace conicval {

SplitResult<GF> is_split(const GF& a, const GF& b) {
  if (a.is_zero() || b.is_zero()) raise(Errc::ZeroInput, "quaternion entries must be nonzero");
  if (!same_context(a.context(), b.context())) raise(Errc::ContextMismatch, "entries from different fields");
  const auto elems = enumerate_field(a.context());
  for (const auto& y : elems) {
    for (const auto& x : elems) {
      if (x.is_zero() && y.is_zero()) continue;
      if (auto z = sqrt(a * x * x + b * y * y)) {
        return {true, std::array<GF, 3>{x, y, *z}, {}};
      }
    }
  }
  raise(Errc::Unreachable, "a conic over a finite field without points");
}

std::optional<std::array<Rational, 3>> find_rational_point(const Rational& a, const Rational& b, long bound) {
  // a x^2 + b y^2 is a square iff (an*bd*x^2 + bn*ad*y^2) * ad*bd is a square.
  const mpz_class an = a.numerator(), ad = a.denominator(), bn = b.numerator(), bd = b.denominator();
  const mpz_class ca = an * bd, cb = bn * ad, den = ad * bd;
  std::vector<long> order{0};
  for (long k = 1; k <= bound; ++k) {
    order.push_back(k);
    order.push_back(-k);
  }
  for (long h = 1; h <= bound; ++h) {
    const std::size_t limit = static_cast<std::size_t>(2 * h + 1);
    for (std::size_t iy = 0; iy < limit; ++iy) {
      const long y = order[iy];
      for (std::size_t ix = 0; ix < limit; ++ix) {
        const long x = order[ix];
        if (std::max(std::labs(x), std::labs(y)) != h) continue;
        const mpz_class n = (ca * x * x + cb * y * y) * den;
        if (n < 0) continue;
        auto [r, exact] = integer_sqrt(n);
        if (!exact) continue;
        return std::array<Rational, 3>{Rational(x), Rational(y), Rational(r, den)};
      }
    }
  }
  return std::nullopt;
}

SplitResult<Rational> is_split(const Rational& a, const Rational& b, long bound) {
  if (a.is_zero() || b.is_zero()) raise(Errc::ZeroInput, "quaternion entries must be nonzero");
  SplitResult<Rational> out;
  out.split = true;
  for (const auto& pl : relevant_places({a, b})) {
    const int s = hilbert_symbol(a, b, pl);
    out.symbols.push_back({pl.to_string(), s});
    if (s == -1) out.split = false;
  }
  if (out.split) out.point = find_rational_point(a, b, bound);
  return out;
}

int tame_symbol(const FqtPlace& v, const RationalFunction<GF>& a, const RationalFunction<GF>& b) {
  const long alpha = v.order(a), beta = v.order(b);
  RationalFunction<GF> c = a.pow(beta) * b.pow(-alpha);
  if ((alpha * beta) % 2 != 0) c = -c;
  return is_square(v.residue(c)) ? 1 : -1;
}

SplitResult<RationalFunction<GF>> is_split(const RationalFunction<GF>& a, const RationalFunction<GF>& b) {
  if (a.is_zero() || b.is_zero()) raise(Errc::ZeroInput, "quaternion entries must be nonzero");
  std::vector<Polynomial<GF>> places;
  for (const auto* p : {&a.num(), &a.den(), &b.num(), &b.den()}) {
    if (p->degree() < 1) continue;
    for (const auto& [f, e] : factor(*p).factors) {
      if (std::find(places.begin(), places.end(), f) == places.end()) places.push_back(f);
    }
  }
  SplitResult<RationalFunction<GF>> out;
  out.split = true;
  auto record = [&](const FqtPlace& v, std::string name) {
    const int s = tame_symbol(v, a, b);
    out.symbols.push_back({std::move(name), s});
    if (s == -1) out.split = false;
  };
  for (const auto& pi : places) record(FqtPlace(pi), pi.to_string("t"));
  record(FqtPlace(a.zero_elem()), "inf");
  return out;
}

SplitResult<RationalFunction<Rational>> is_split(const RationalFunction<Rational>&, const RationalFunction<Rational>&) {
  raise(Errc::UnsupportedField, "splitting of quaternion algebras over Q(t) is not implemented");
}

std::optional<std::string> known_global_split(const PAdicValuation&, const Rational& a, const Rational& b) {
  auto s = is_split(a, b, 0);
  if (!s.split) return std::nullopt;
  return "Hilbert symbols are +1 at every place of Q";
}

std::optional<std::string> known_global_split(const QtPlace& v, const RationalFunction<Rational>& a,
                                              const RationalFunction<Rational>& b) {
  if (is_square(a)) return "a = " + v.format(a) + " is a square";
  if (is_square(b)) return "b = " + v.format(b) + " is a square";
  if (is_square(-(a * b))) return "-ab = " + v.format(-(a * b)) + " is a square";
  return std::nullopt;
}

std::optional<std::string> known_global_split(const FqtPlace&, const RationalFunction<GF>& a,
                                              const RationalFunction<GF>& b) {
  auto s = is_split(a, b);
  if (!s.split) return std::nullopt;
  return "tame symbols are +1 at every place of the rational function field";
}

}  // namespace conicval
