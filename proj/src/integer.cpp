#include "conicval/integer.hpp"

#include <algorithm>
#include <map>

#include "conicval/error.hpp"

namespace conicval {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::NegativeValue: return "NegativeValue";
    case Errc::NonzeroValue: return "NonzeroValue";
    case Errc::InvalidPivot: return "InvalidPivot";
    case Errc::NotInSubfield: return "NotInSubfield";
    case Errc::ConstantInput: return "ConstantInput";
    case Errc::SquareInput: return "SquareInput";
    case Errc::NotUnitUnit: return "NotUnitUnit";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::UnsupportedPlace: return "UnsupportedPlace";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::WitnessNotFound: return "WitnessNotFound";
    case Errc::PrecisionTooLow: return "PrecisionTooLow";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Unreachable: return "Unreachable";
  }
  return "Unknown";
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

bool miller_rabin_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 128;
    auto f = [&](const mpz_class& z) {
      mpz_class out = z * z + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class diff = x - ys;
        diff = abs(diff);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return miller_rabin_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

unsigned remove_factor(mpz_class& n, const mpz_class& p) {
  if (n == 0) raise(Errc::ZeroInput, "remove_factor of zero");
  return static_cast<unsigned>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n) {
  if (n == 0) raise(Errc::ZeroInput, "cannot factor zero");
  mpz_class m = abs(n);
  std::map<mpz_class, unsigned> found;
  for (unsigned long p = 2; p < 1000 && m > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_class pp = p;
      found[pp] += remove_factor(m, pp);
    }
  }
  factor_into(m, found);
  return {found.begin(), found.end()};
}

int legendre(const mpz_class& a, const mpz_class& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

mpz_class squarefree_part(const mpz_class& n) {
  mpz_class result = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factor_integer(n)) {
    if (e % 2 == 1) result *= p;
  }
  return result;
}

std::pair<mpz_class, bool> integer_sqrt(const mpz_class& n) {
  if (n < 0) return {0, false};
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return {root, root * root == n};
}

}  // namespace conicval
