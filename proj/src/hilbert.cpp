#include "conicval/hilbert.hpp"

#include <algorithm>

#include "conicval/error.hpp"
#include "conicval/integer.hpp"

namespace conicval {

namespace {

// An integer in the same square class as the rational x.
mpz_class integral_representative(const Rational& x) { return x.numerator() * x.denominator(); }

int mod8(const mpz_class& u) {
  mpz_class r = u % 8;
  if (r < 0) r += 8;
  return static_cast<int>(r.get_si());
}

int epsilon(const mpz_class& u) { return ((mod8(u) - 1) / 2) % 2; }
int omega(const mpz_class& u) {
  const int r = mod8(u);
  return (r * r - 1) / 8 % 2;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const QPlace& place) {
  if (a.is_zero() || b.is_zero()) raise(Errc::ZeroInput, "Hilbert symbol of 0");
  if (place.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
  const mpz_class& p = place.prime;
  if (p < 2 || !is_prime(p)) throw UsageError("not a prime: " + p.get_str());
  mpz_class u = integral_representative(a), v = integral_representative(b);
  const long alpha = remove_factor(u, p);
  const long beta = remove_factor(v, p);
  if (p == 2) {
    const int e = epsilon(u) * epsilon(v) + alpha * omega(v) + beta * omega(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int s = 1;
  const mpz_class half = (p - 1) / 2;
  if ((alpha * beta) % 2 != 0 && half % 2 != 0) s = -s;
  if (beta % 2 != 0) s *= legendre(u, p);
  if (alpha % 2 != 0) s *= legendre(v, p);
  return s;
}

std::vector<QPlace> relevant_places(const std::vector<Rational>& entries) {
  std::vector<mpz_class> primes{2};
  for (const auto& x : entries) {
    for (const auto& n : {x.numerator(), x.denominator()}) {
      if (n == 0) continue;
      for (const auto& [p, e] : factor_integer(n)) primes.push_back(p);
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<QPlace> out{QPlace::real()};
  for (const auto& p : primes) out.push_back(QPlace::at(p));
  return out;
}

std::vector<QPlace> ramified_places(const Rational& a, const Rational& b) {
  std::vector<QPlace> out;
  for (const auto& pl : relevant_places({a, b})) {
    if (hilbert_symbol(a, b, pl) == -1) out.push_back(pl);
  }
  return out;
}

bool quaternion_isomorphic(const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2) {
  for (const auto& pl : relevant_places({a1, b1, a2, b2})) {
    if (hilbert_symbol(a1, b1, pl) != hilbert_symbol(a2, b2, pl)) return false;
  }
  return true;
}

}  // namespace conicval
