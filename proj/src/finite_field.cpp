#include "conicval/finite_field.hpp"

#include "conicval/error.hpp"
#include "conicval/factor.hpp"
#include "conicval/integer.hpp"
#include "conicval/polynomial.hpp"

namespace conicval {

namespace {

constexpr std::uint64_t kMaxPrime = (1ULL << 31);

void check_prime(std::uint64_t p) {
  if (p == 2) throw UsageError("characteristic 2 is not supported (residue characteristic must be odd)");
  if (p >= kMaxPrime || !is_prime(mpz_class(static_cast<unsigned long>(p)))) {
    throw UsageError("GF(p) needs an odd prime p below 2^31, got " + std::to_string(p));
  }
}

}  // namespace

GFContext::GFContext(std::uint64_t p, std::vector<std::uint64_t> modulus) : p_(p), modulus_(std::move(modulus)) {
  mpz_pow_ui(order_.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t(),
             static_cast<unsigned long>(degree()));
}

GFContextPtr GFContext::prime(std::uint64_t p) {
  check_prime(p);
  return GFContextPtr(new GFContext(p, {0, 1}));
}

GFContextPtr GFContext::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  check_prime(p);
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2 || modulus.back() != 1) throw UsageError("field modulus must be monic of degree >= 1");
  if (modulus.size() == 2) return prime(p);
  auto base = prime(p);
  std::vector<GF> coeffs;
  for (auto c : modulus) coeffs.emplace_back(base, static_cast<std::int64_t>(c));
  if (!is_irreducible(Polynomial<GF>(coeffs, GF(base, 0)))) {
    throw UsageError("field modulus is not irreducible over GF(" + std::to_string(p) + ")");
  }
  return GFContextPtr(new GFContext(p, std::move(modulus)));
}

GFContextPtr GFContext::of_order(const mpz_class& q) {
  if (q < 3) throw UsageError("field order must be an odd prime power");
  auto factors = factor_integer(q);
  if (factors.size() != 1) throw UsageError("field order " + q.get_str() + " is not a prime power");
  if (!factors[0].first.fits_ulong_p()) throw UsageError("field characteristic too large");
  const std::uint64_t p = factors[0].first.get_ui();
  const unsigned d = factors[0].second;
  if (d == 1) return prime(p);
  auto base = prime(p);
  // Search monic moduli u^d + c_{d-1}u^{d-1} + ... + c_0 in base-p counting order.
  mpz_class count;
  mpz_pow_ui(count.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t(), d);
  for (mpz_class n = 0; n < count; ++n) {
    std::vector<std::uint64_t> m(d + 1, 0);
    mpz_class k = n;
    for (unsigned i = 0; i < d; ++i) {
      m[i] = mpz_class(k % static_cast<unsigned long>(p)).get_ui();
      k /= static_cast<unsigned long>(p);
    }
    m[d] = 1;
    if (m[0] == 0) continue;
    std::vector<GF> coeffs;
    for (auto c : m) coeffs.emplace_back(base, static_cast<std::int64_t>(c));
    if (is_irreducible(Polynomial<GF>(coeffs, GF(base, 0)))) return GFContextPtr(new GFContext(p, std::move(m)));
  }
  raise(Errc::Unreachable, "no irreducible polynomial found");
}

std::string GFContext::describe() const {
  std::string base = "GF(" + std::to_string(p_) + ")";
  if (is_prime_field()) return base;
  auto ctx = prime(p_);
  std::vector<GF> coeffs;
  for (auto c : modulus_) coeffs.emplace_back(ctx, static_cast<std::int64_t>(c));
  return base + "[u]/(" + Polynomial<GF>(coeffs, GF(ctx, 0)).to_string("u") + ")";
}

bool same_context(const GFContextPtr& a, const GFContextPtr& b) { return a == b || (a && b && *a == *b); }

GF::GF(GFContextPtr ctx, std::int64_t n) : ctx_(std::move(ctx)), c_(static_cast<std::size_t>(ctx_->degree()), 0) {
  const auto p = static_cast<std::int64_t>(ctx_->characteristic());
  std::int64_t r = n % p;
  if (r < 0) r += p;
  c_[0] = static_cast<std::uint64_t>(r);
}

GF::GF(GFContextPtr ctx, std::vector<std::uint64_t> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  const auto d = static_cast<std::size_t>(ctx_->degree());
  if (c_.size() > d) {
    // reduce modulo m
    const auto& m = ctx_->modulus();
    const auto p = ctx_->characteristic();
    for (std::size_t k = c_.size(); k-- > d;) {
      const std::uint64_t f = c_[k] % p;
      if (f == 0) continue;
      for (std::size_t i = 0; i <= d; ++i) {
        c_[k - d + i] = (c_[k - d + i] % p + p - mulmod(f, m[i], p)) % p;
      }
    }
  }
  c_.resize(d, 0);
  for (auto& x : c_) x %= ctx_->characteristic();
}

GF GF::from_integer(GFContextPtr ctx, const mpz_class& n) {
  mpz_class r = n % static_cast<unsigned long>(ctx->characteristic());
  if (r < 0) r += static_cast<unsigned long>(ctx->characteristic());
  return GF(std::move(ctx), static_cast<std::int64_t>(r.get_ui()));
}

GF GF::generator(GFContextPtr ctx) {
  if (ctx->is_prime_field()) raise(Errc::InvalidArgument, "prime field has no generator u");
  std::vector<std::uint64_t> c(static_cast<std::size_t>(ctx->degree()), 0);
  c[1] = 1;
  return GF(std::move(ctx), std::move(c));
}

GF GF::from_index(GFContextPtr ctx, std::uint64_t index) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(ctx->degree()), 0);
  for (auto& x : c) {
    x = index % ctx->characteristic();
    index /= ctx->characteristic();
  }
  return GF(std::move(ctx), std::move(c));
}

std::uint64_t GF::index() const {
  std::uint64_t idx = 0;
  for (std::size_t i = c_.size(); i-- > 0;) idx = idx * ctx_->characteristic() + c_[i];
  return idx;
}

bool GF::is_zero() const {
  for (auto x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool GF::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

bool GF::is_prime_subfield() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

void GF::check_same(const GF& o) const {
  if (!same_context(ctx_, o.ctx_)) {
    raise(Errc::ContextMismatch, ctx_->describe() + " vs " + o.ctx_->describe());
  }
}

GF GF::operator-() const {
  GF r(*this);
  const auto p = ctx_->characteristic();
  for (auto& x : r.c_) x = (p - x) % p;
  return r;
}

GF& GF::operator+=(const GF& o) {
  check_same(o);
  const auto p = ctx_->characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p;
  return *this;
}

GF& GF::operator-=(const GF& o) {
  check_same(o);
  const auto p = ctx_->characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + p - o.c_[i]) % p;
  return *this;
}

GF& GF::operator*=(const GF& o) {
  check_same(o);
  const auto p = ctx_->characteristic();
  const std::size_t d = c_.size();
  if (d == 1) {
    c_[0] = mulmod(c_[0], o.c_[0], p);
    return *this;
  }
  std::vector<std::uint64_t> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + mulmod(c_[i], o.c_[j], p)) % p;
  }
  *this = GF(ctx_, std::move(prod));
  return *this;
}

GF GF::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  GF result = one_like(), base = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= base;
  }
  return result;
}

GF GF::inverse() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of 0 in " + ctx_->describe());
  if (ctx_->is_prime_field()) {
    const auto p = ctx_->characteristic();
    return GF(ctx_, static_cast<std::int64_t>(powmod(c_[0], p - 2, p)));
  }
  return pow(mpz_class(ctx_->order() - 2));
}

bool operator==(const GF& a, const GF& b) { return same_context(a.ctx_, b.ctx_) && a.c_ == b.c_; }

std::string GF::to_string() const {
  if (ctx_->is_prime_field()) return std::to_string(c_[0]);
  auto base = GFContext::prime(ctx_->characteristic());
  std::vector<GF> coeffs;
  for (auto c : c_) coeffs.emplace_back(base, static_cast<std::int64_t>(c));
  return Polynomial<GF>(coeffs, GF(base, 0)).to_string("u");
}

bool is_square(const GF& a) {
  if (a.is_zero()) return true;
  return a.pow(mpz_class((a.context()->order() - 1) / 2)).is_one();
}

std::optional<GF> sqrt(const GF& a) {
  if (a.is_zero()) return a;
  if (!is_square(a)) return std::nullopt;
  const auto& ctx = a.context();
  mpz_class t = ctx->order() - 1;
  unsigned long s = 0;
  while (mpz_even_p(t.get_mpz_t())) {
    t >>= 1;
    ++s;
  }
  GF z = a.one_like();
  for (std::uint64_t idx = 2;; ++idx) {
    z = GF::from_index(ctx, idx);
    if (!is_square(z)) break;
  }
  GF c = z.pow(t);
  GF x = a.pow(mpz_class((t + 1) / 2));
  GF b = a.pow(t);
  unsigned long m = s;
  while (!b.is_one()) {
    unsigned long i = 0;
    GF bb = b;
    while (!bb.is_one()) {
      bb *= bb;
      ++i;
    }
    GF w = c;
    for (unsigned long k = 0; k + i + 1 < m; ++k) w *= w;
    x *= w;
    c = w * w;
    b *= c;
    m = i;
  }
  GF other = -x;
  return other.index() < x.index() ? other : x;
}

std::vector<GF> enumerate_field(const GFContextPtr& ctx) {
  if (!ctx->order().fits_ulong_p() || ctx->order() > 1000000) {
    raise(Errc::InvalidArgument, "field too large to enumerate: " + ctx->describe());
  }
  const std::uint64_t q = ctx->order().get_ui();
  std::vector<GF> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(GF::from_index(ctx, i));
  return out;
}

}  // namespace conicval
