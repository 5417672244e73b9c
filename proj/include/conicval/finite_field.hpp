#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace conicval {

class GFContext;
using GFContextPtr = std::shared_ptr<const GFContext>;

/// The finite field F_p[u]/(m(u)) for an odd prime p and a monic irreducible m.
/// The prime field is the case m = u.
class GFContext {
 public:
  /// F_p, p an odd prime below 2^31.
  static GFContextPtr prime(std::uint64_t p);
  /// F_p[u]/(m); `modulus` is monic, lowest degree first, irreducible over F_p.
  static GFContextPtr extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
  /// F_q with q = p^d; the modulus is the first monic irreducible in
  /// base-p counting order of its lower coefficients.
  static GFContextPtr of_order(const mpz_class& q);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  bool is_prime_field() const { return degree() == 1; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  const mpz_class& order() const { return order_; }

  /// "GF(5)" or "GF(3)[u]/(u^2 + 1)".
  std::string describe() const;

  friend bool operator==(const GFContext& a, const GFContext& b) { return a.p_ == b.p_ && a.modulus_ == b.modulus_; }

 private:
  GFContext(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t p_;
  std::vector<std::uint64_t> modulus_;
  mpz_class order_;
};

bool same_context(const GFContextPtr& a, const GFContextPtr& b);

/// Element of a finite field context: d coefficients of 1, u, ..., u^{d-1}.
class GF {
 public:
  GF(GFContextPtr ctx, std::int64_t n);
  GF(GFContextPtr ctx, std::vector<std::uint64_t> coeffs);

  static GF from_integer(GFContextPtr ctx, const mpz_class& n);
  static GF generator(GFContextPtr ctx);
  /// Enumeration order used by exhaustive searches: index = sum c_i p^i.
  static GF from_index(GFContextPtr ctx, std::uint64_t index);
  std::uint64_t index() const;

  const GFContextPtr& context() const { return ctx_; }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime field.
  bool is_prime_subfield() const;

  GF zero_like() const { return GF(ctx_, 0); }
  GF one_like() const { return GF(ctx_, 1); }
  GF int_like(const mpz_class& n) const { return from_integer(ctx_, n); }

  GF inverse() const;
  GF pow(const mpz_class& e) const;
  GF pow(long e) const { return pow(mpz_class(e)); }

  GF operator-() const;
  GF& operator+=(const GF& o);
  GF& operator-=(const GF& o);
  GF& operator*=(const GF& o);
  GF& operator/=(const GF& o) { return *this *= o.inverse(); }

  friend GF operator+(GF a, const GF& b) { return a += b; }
  friend GF operator-(GF a, const GF& b) { return a -= b; }
  friend GF operator*(GF a, const GF& b) { return a *= b; }
  friend GF operator/(GF a, const GF& b) { return a /= b; }

  friend bool operator==(const GF& a, const GF& b);

  /// Integer in [0, p) for prime fields, otherwise a polynomial in u.
  std::string to_string() const;

 private:
  void check_same(const GF& o) const;

  GFContextPtr ctx_;
  std::vector<std::uint64_t> c_;
};

/// Euler criterion: a != 0 is a square iff a^((q-1)/2) = 1. Zero is a square.
bool is_square(const GF& a);
/// A square root when one exists (Tonelli-Shanks); the root with the
/// smaller enumeration index is returned.
std::optional<GF> sqrt(const GF& a);

/// All elements of the field in enumeration order; q must be small.
std::vector<GF> enumerate_field(const GFContextPtr& ctx);

}  // namespace conicval
