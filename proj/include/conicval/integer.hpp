#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace conicval {

/// Deterministic for n < 2^64; beyond that a 40-round probabilistic test.
bool is_prime(const mpz_class& n);

/// Prime factorization of |n| with multiplicities, primes ascending.
/// n = 0 is rejected with ZeroInput.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

/// Largest e with p^e | n, n != 0.
unsigned remove_factor(mpz_class& n, const mpz_class& p);

/// Legendre symbol (a | p) for an odd prime p, in {-1, 0, 1}.
int legendre(const mpz_class& a, const mpz_class& p);

/// The squarefree integer in the square class of n (sign kept), n != 0.
mpz_class squarefree_part(const mpz_class& n);

/// Floor square root; second is true when n is a perfect square.
std::pair<mpz_class, bool> integer_sqrt(const mpz_class& n);

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace conicval
