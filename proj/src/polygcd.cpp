#include <vector>

#include "conicval/integer.hpp"
#include "conicval/rational_function.hpp"

namespace conicval {

namespace {

using ModPoly = std::vector<std::uint64_t>;

// Reduction mod p keeping the degree, or empty when p divides a denominator
// or the leading coefficient.
ModPoly reduce_mod(const Polynomial<Rational>& f, std::uint64_t p) {
  ModPoly out;
  for (const auto& c : f.coefficients()) {
    const std::uint64_t d = mpz_fdiv_ui(c.raw().get_den_mpz_t(), p);
    if (d == 0) return {};
    const std::uint64_t n = mpz_fdiv_ui(c.raw().get_num_mpz_t(), p);
    out.push_back(mulmod(n, powmod(d, p - 2, p), p));
  }
  if (out.back() == 0) return {};
  return out;
}

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
  const std::uint64_t inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(f, b[i], p)) % p;
    trim(a);
  }
  return a;
}

bool coprime_mod(ModPoly a, ModPoly b, std::uint64_t p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

}  // namespace

Polynomial<Rational> gcd(Polynomial<Rational> a, Polynomial<Rational> b) {
  if (!a.is_zero() && !b.is_zero() && (a.degree() > 0 || b.degree() > 0)) {
    for (std::uint64_t p : {2147483647ULL, 2147483629ULL, 2147483587ULL}) {
      ModPoly ra = reduce_mod(a, p), rb = reduce_mod(b, p);
      if (ra.empty() || rb.empty()) continue;
      if (coprime_mod(std::move(ra), std::move(rb), p)) return a.one_like();
      break;
    }
  }
  while (!b.is_zero()) {
    Polynomial<Rational> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace conicval
