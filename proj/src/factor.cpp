#include "conicval/factor.hpp"

#include <algorithm>
#include <random>

#include "conicval/error.hpp"
#include "conicval/integer.hpp"

namespace conicval {

namespace {

using GFPoly = Polynomial<GF>;

GFPoly x_poly(const GF& proto) { return GFPoly::variable(proto); }

bool factor_less(const GFPoly& a, const GFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto ia = a.coeff(static_cast<std::size_t>(i)).index();
    auto ib = b.coeff(static_cast<std::size_t>(i)).index();
    if (ia != ib) return ia < ib;
  }
  return false;
}

GF pth_root(const GF& c) {
  const auto& ctx = c.context();
  mpz_class e = ctx->order() / static_cast<unsigned long>(ctx->characteristic());
  return c.pow(e);
}

// f'(x) = 0, so f = g(x^p); returns g with p-th roots taken coefficientwise.
GFPoly pth_root(const GFPoly& f) {
  const auto p = static_cast<std::size_t>(f.zero_elem().context()->characteristic());
  std::vector<GF> out;
  for (std::size_t i = 0; i < f.coefficients().size(); i += p) out.push_back(pth_root(f.coeff(i)));
  return GFPoly(std::move(out), f.zero_elem());
}

void squarefree_gf(const GFPoly& f, unsigned mult, std::vector<std::pair<GFPoly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const unsigned p = static_cast<unsigned>(f.zero_elem().context()->characteristic());
  GFPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_gf(pth_root(f), mult * p, out);
    return;
  }
  GFPoly c = gcd(f, d);
  GFPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    GFPoly y = gcd(w, c);
    GFPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_gf(pth_root(c), mult * p, out);
}

std::vector<std::pair<GFPoly, int>> distinct_degree(GFPoly f) {
  std::vector<std::pair<GFPoly, int>> out;
  const mpz_class q = f.zero_elem().context()->order();
  const GFPoly x = x_poly(f.zero_elem());
  GFPoly h = x % f;
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = powmod(h, q, f);
    GFPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

GFPoly random_poly(const GF& proto, int degree_below, std::mt19937_64& rng) {
  const auto& ctx = proto.context();
  std::vector<GF> coeffs;
  for (int i = 0; i < degree_below; ++i) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(ctx->degree()));
    for (auto& x : c) x = rng() % ctx->characteristic();
    coeffs.emplace_back(ctx, std::move(c));
  }
  return GFPoly(std::move(coeffs), proto);
}

void equal_degree(const GFPoly& f, int d, std::mt19937_64& rng, std::vector<GFPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const mpz_class q = f.zero_elem().context()->order();
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  const mpz_class e = (qd - 1) / 2;
  for (;;) {
    GFPoly a = random_poly(f.zero_elem(), f.degree(), rng);
    if (a.degree() <= 0) continue;
    GFPoly b = powmod(a, e, f) - f.one_like();
    GFPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Polynomial<GF>& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const GFPoly g = f.monic();
  const mpz_class q = g.zero_elem().context()->order();
  const GFPoly x = x_poly(g.zero_elem());
  auto frobenius_power = [&](int k) {
    GFPoly h = x % g;
    for (int i = 0; i < k; ++i) h = powmod(h, q, g);
    return h;
  };
  if (frobenius_power(n) != x % g) return false;
  for (const auto& [r, e] : factor_integer(n)) {
    (void)e;
    const int k = n / static_cast<int>(r.get_si());
    if (gcd(frobenius_power(k) - x, g).degree() != 0) return false;
  }
  return true;
}

Factorization<GF> factor(const Polynomial<GF>& f) {
  if (f.is_zero()) raise(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
  Factorization<GF> result{f.leading(), {}};
  std::vector<std::pair<GFPoly, unsigned>> sqf;
  squarefree_gf(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<GFPoly> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) result.factors.emplace_back(std::move(piece), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
  // Merge equal factors produced from different squarefree layers.
  std::vector<std::pair<GFPoly, unsigned>> merged;
  for (auto& fe : result.factors) {
    if (!merged.empty() && merged.back().first == fe.first) {
      merged.back().second += fe.second;
    } else {
      merged.push_back(std::move(fe));
    }
  }
  result.factors = std::move(merged);
  return result;
}

std::vector<GF> roots(const Polynomial<GF>& f) {
  if (f.is_zero()) raise(Errc::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<GF> out;
  if (f.degree() <= 0) return out;
  const GFPoly g = f.monic();
  const GFPoly x = x_poly(g.zero_elem());
  GFPoly split = gcd(powmod(x, g.zero_elem().context()->order(), g) - x, g);
  if (split.degree() <= 0) return out;
  std::mt19937_64 rng(0x5eed);
  std::vector<GFPoly> linear;
  equal_degree(split, 1, rng, linear);
  for (const auto& l : linear) out.push_back(-l.coeff(0));
  std::sort(out.begin(), out.end(), [](const GF& a, const GF& b) { return a.index() < b.index(); });
  return out;
}

// ---------------------------------------------------------------------------
// Factorization over Q.

namespace {

using QPoly = Polynomial<Rational>;
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void zmod(ZPoly& a, const mpz_class& m, bool symmetric) {
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (symmetric && 2 * c > m) c -= m;
  }
  trim(a);
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Primitive integer polynomial with positive leading coefficient.
ZPoly primitive_integer(const QPoly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  ZPoly z;
  for (const auto& c : f.coefficients()) z.push_back(c.numerator() * (l / c.denominator()));
  mpz_class g = zcontent(z);
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

QPoly to_q(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& x : z) c.emplace_back(x);
  return QPoly(std::move(c), Rational());
}

GFPoly to_gf(const ZPoly& z, const GFContextPtr& ctx) {
  std::vector<GF> c;
  for (const auto& x : z) c.push_back(GF::from_integer(ctx, x));
  return GFPoly(std::move(c), GF(ctx, 0));
}

ZPoly from_gf(const GFPoly& g) {
  ZPoly z;
  for (const auto& c : g.coefficients()) z.emplace_back(static_cast<unsigned long>(c.coefficients()[0]));
  return z;
}

// Lifts G = A*B (mod p) with A = a, B = b monic and coprime mod p to a
// factorization modulo p^k.
std::pair<ZPoly, ZPoly> hensel_two(const ZPoly& G, const GFPoly& a, const GFPoly& b, unsigned long p, unsigned k) {
  const auto ctx = a.zero_elem().context();
  auto [g, s, t] = extended_gcd(a, b);
  (void)s;
  if (g.degree() != 0) raise(Errc::Unreachable, "Hensel factors not coprime");
  ZPoly A = from_gf(a), B = from_gf(b);
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  mpz_class pj = p;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly E = G;
    ZPoly AB = zmul(A, B);
    if (E.size() < AB.size()) E.resize(AB.size(), 0);
    for (std::size_t i = 0; i < AB.size(); ++i) E[i] -= AB[i];
    zmod(E, pk, false);
    for (auto& c : E) c /= pj;
    GFPoly e = to_gf(E, ctx);
    GFPoly alpha = (e * t) % a;
    GFPoly beta = (e - alpha * b) / a;
    ZPoly da = from_gf(alpha), db = from_gf(beta);
    if (A.size() < da.size()) A.resize(da.size(), 0);
    if (B.size() < db.size()) B.resize(db.size(), 0);
    for (std::size_t i = 0; i < da.size(); ++i) A[i] += pj * da[i];
    for (std::size_t i = 0; i < db.size(); ++i) B[i] += pj * db[i];
    pj *= p;
  }
  zmod(A, pk, false);
  zmod(B, pk, false);
  return {A, B};
}

std::vector<QPoly> zassenhaus(const ZPoly& g) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n <= 1) return {to_q(g)};
  const mpz_class lc = g.back();
  unsigned long p = 3;
  GFContextPtr ctx;
  for (;; p += 2) {
    if (!is_prime(mpz_class(p)) || mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    ctx = GFContext::prime(p);
    GFPoly gp = to_gf(g, ctx);
    if (gcd(gp, gp.derivative()).degree() == 0) break;
  }
  Factorization<GF> modular = factor(to_gf(g, ctx));
  std::vector<GFPoly> local;
  for (const auto& [f, e] : modular.factors) local.push_back(f);
  if (local.size() == 1) return {to_q(g)};

  mpz_class norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  mpz_class bound = integer_sqrt(norm2).first + 1;
  bound *= abs(lc);
  bound <<= static_cast<unsigned long>(n + 1);
  unsigned k = 1;
  mpz_class pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }

  // Multi-factor lift by peeling one factor at a time.
  ZPoly current = g;
  {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    for (auto& c : current) c *= inv;
    zmod(current, pk, false);
  }
  std::vector<ZPoly> lifted;
  for (std::size_t i = 0; i + 1 < local.size(); ++i) {
    GFPoly rest = local[i + 1];
    for (std::size_t j = i + 2; j < local.size(); ++j) rest = rest * local[j];
    auto [A, B] = hensel_two(current, local[i], rest, p, k);
    lifted.push_back(std::move(A));
    current = std::move(B);
  }
  lifted.push_back(current);

  std::vector<QPoly> found;
  ZPoly remaining = g;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  for (std::size_t s = 1; 2 * s <= alive.size();) {
    bool progress = false;
    // enumerate subsets of `alive` of size s via bitmasks (at most 8 factors)
    const std::size_t m = alive.size();
    for (unsigned mask = 0; mask < (1U << m); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != s) continue;
      ZPoly cand{mpz_class(remaining.back())};
      for (std::size_t i = 0; i < m; ++i) {
        if (mask & (1U << i)) cand = zmul(cand, lifted[alive[i]]);
      }
      zmod(cand, pk, true);
      if (cand.empty()) continue;
      mpz_class cc = zcontent(cand);
      for (auto& c : cand) c /= cc;
      auto [quot, rem] = to_q(remaining).divmod(to_q(cand));
      if (!rem.is_zero()) continue;
      bool integral = true;
      for (const auto& c : quot.coefficients()) integral = integral && c.is_integer();
      if (!integral) continue;
      found.push_back(to_q(cand));
      remaining = primitive_integer(quot);
      std::vector<std::size_t> next;
      for (std::size_t i = 0; i < m; ++i) {
        if (!(mask & (1U << i))) next.push_back(alive[i]);
      }
      alive = std::move(next);
      progress = true;
      break;
    }
    if (!progress) ++s;
  }
  if (remaining.size() > 1) found.push_back(to_q(remaining));
  return found;
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.coeff(static_cast<std::size_t>(i));
    const auto& y = b.coeff(static_cast<std::size_t>(i));
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

std::vector<std::pair<Polynomial<Rational>, unsigned>> squarefree_decomposition(const Polynomial<Rational>& f) {
  if (f.is_zero()) raise(Errc::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<QPoly, unsigned>> out;
  if (f.degree() == 0) return out;
  const QPoly monic = f.monic();
  const QPoly a = gcd(monic, monic.derivative());
  QPoly b = monic / a;
  QPoly c = monic.derivative() / a;
  QPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    QPoly ai = gcd(b, d);
    b = b / ai;
    c = d / ai;
    d = c - b.derivative();
    if (ai.degree() > 0) out.emplace_back(ai, i);
  }
  return out;
}

Factorization<Rational> factor(const Polynomial<Rational>& f) {
  if (f.is_zero()) raise(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
  if (f.degree() > kMaxRationalFactorDegree) {
    raise(Errc::DegreeTooLarge, "factorization over Q is limited to degree " +
                                    std::to_string(kMaxRationalFactorDegree));
  }
  Factorization<Rational> result{f.leading(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& piece : zassenhaus(primitive_integer(part))) result.factors.emplace_back(piece.monic(), mult);
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return qpoly_less(a.first, b.first); });
  return result;
}

bool is_irreducible(const Polynomial<Rational>& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace conicval
