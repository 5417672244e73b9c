#include "conicval/oracle.hpp"

#include <cstdio>
#include <vector>

#include "conicval/error.hpp"
#include "conicval/integer.hpp"

namespace conicval {

std::string digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<std::array<GF, 3>> isotropy_search(const GF& a, const GF& b) {
  const auto elems = enumerate_field(a.context());
  for (const auto& y : elems) {
    for (const auto& x : elems) {
      const GF lhs = a * x * x + b * y * y;
      for (const auto& z : elems) {
        if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
        if (z * z == lhs) return std::array<GF, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<Rational, 3>> isotropy_search(const Rational& a, const Rational& b, long bound) {
  for (long h = 1; h <= bound; ++h) {
    for (long y = -h; y <= h; ++y) {
      for (long x = -h; x <= h; ++x) {
        if (std::max(std::labs(x), std::labs(y)) != h) continue;
        const mpq_class val = a.raw() * x * x + b.raw() * y * y;
        if (sgn(val) < 0) continue;
        if (mpz_perfect_square_p(val.get_num_mpz_t()) == 0 || mpz_perfect_square_p(val.get_den_mpz_t()) == 0) {
          continue;
        }
        mpz_class zn, zd;
        mpz_sqrt(zn.get_mpz_t(), val.get_num_mpz_t());
        mpz_sqrt(zd.get_mpz_t(), val.get_den_mpz_t());
        Rational z(zn, zd);
        if (!(a * Rational(x) * Rational(x) + b * Rational(y) * Rational(y) == z * z)) {
          raise(Errc::Unreachable, "isotropy search produced an invalid point");
        }
        return std::array<Rational, 3>{Rational(x), Rational(y), z};
      }
    }
  }
  return std::nullopt;
}

namespace {

using Row = std::vector<std::uint64_t>;

// A nonzero kernel vector of the matrix whose columns are `cols`, if any.
std::optional<Row> kernel_vector(const std::vector<Row>& cols, std::uint64_t p) {
  const std::size_t ncols = cols.size();
  std::size_t nrows = 0;
  for (const auto& c : cols) nrows = std::max(nrows, c.size());
  std::vector<Row> m(nrows, Row(ncols, 0));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i];
  }
  std::vector<long> pivot_of_col(ncols, -1);
  std::size_t r = 0;
  for (std::size_t j = 0; j < ncols && r < nrows; ++j) {
    std::size_t k = r;
    while (k < nrows && m[k][j] == 0) ++k;
    if (k == nrows) continue;
    std::swap(m[k], m[r]);
    const std::uint64_t inv = powmod(m[r][j], p - 2, p);
    for (auto& x : m[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || m[i][j] == 0) continue;
      const std::uint64_t f = m[i][j];
      for (std::size_t c = 0; c < ncols; ++c) m[i][c] = (m[i][c] + p - mulmod(f, m[r][c], p)) % p;
    }
    pivot_of_col[j] = static_cast<long>(r);
    ++r;
  }
  for (std::size_t free = 0; free < ncols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Row v(ncols, 0);
    v[free] = 1;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (pivot_of_col[j] >= 0) v[j] = (p - m[static_cast<std::size_t>(pivot_of_col[j])][free]) % p;
    }
    return v;
  }
  return std::nullopt;
}

Row coeffs_of(const Polynomial<GF>& f) {
  Row out;
  for (const auto& c : f.coefficients()) out.push_back(c.coefficients()[0]);
  return out;
}

}  // namespace

int degree_oracle(const RationalFunction<GF>& y) {
  const auto& ctx = y.zero_elem().context();
  const std::uint64_t p = ctx->characteristic();
  if (!ctx->is_prime_field() || p > 13) throw UsageError("degree oracle needs a prime field F_p with p <= 13");
  if (y.is_constant()) raise(Errc::ConstantInput, "Y is constant");
  const auto& f = y.num();
  const auto& g = y.den();
  const GF zero(ctx, 0);
  for (int n = 1; n <= 64; ++n) {
    // columns X^i f^j g^(n-j); a kernel vector is a relation P(X, f/g) g^n = 0
    std::vector<Polynomial<GF>> basis;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        basis.push_back(Polynomial<GF>::monomial(GF(ctx, 1), static_cast<std::size_t>(i)) *
                        f.pow(static_cast<unsigned long>(j)) * g.pow(static_cast<unsigned long>(n - j)));
      }
    }
    std::vector<Row> cols;
    for (const auto& b : basis) cols.push_back(coeffs_of(b));
    auto ker = kernel_vector(cols, p);
    if (!ker) continue;
    Polynomial<GF> check(zero);
    for (std::size_t k = 0; k < basis.size(); ++k) check += GF(ctx, static_cast<std::int64_t>((*ker)[k])) * basis[k];
    if (!check.is_zero()) raise(Errc::Unreachable, "degree oracle relation does not vanish");
    return n;
  }
  raise(Errc::Unreachable, "degree oracle found no relation");
}

int hensel_count(std::uint64_t p, const Rational& a, int k) {
  if (k < 4) raise(Errc::PrecisionTooLow, "Hensel lifting needs k >= 4");
  if (p == 2 || !is_prime(mpz_class(static_cast<unsigned long>(p)))) throw UsageError("p must be an odd prime");
  if (a.is_zero()) raise(Errc::ZeroInput, "a = 0");
  mpz_class num = a.numerator(), den = a.denominator();
  const mpz_class pz(static_cast<unsigned long>(p));
  const long vnum = remove_factor(num, pz), vden = remove_factor(den, pz);
  if ((vnum - vden) % 2 != 0) raise(Errc::PreconditionViolated, "v(a) must be even");
  mpz_class modulus;
  mpz_pow_ui(modulus.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  const mpz_class target = ((num * dinv) % modulus + modulus) % modulus;

  std::vector<mpz_class> roots;
  for (std::uint64_t r = 0; r < p; ++r) {
    mpz_class rr(static_cast<unsigned long>(r));
    if ((rr * rr - target) % pz == 0) roots.push_back(rr);
  }
  mpz_class pj = pz;
  for (int j = 1; j < k; ++j) {
    const mpz_class next = pj * pz;
    std::vector<mpz_class> lifted;
    for (const auto& r : roots) {
      for (std::uint64_t d = 0; d < p; ++d) {
        mpz_class cand = r + pj * static_cast<unsigned long>(d);
        if ((cand * cand - target) % next == 0) lifted.push_back(cand);
      }
    }
    roots = std::move(lifted);
    pj = next;
  }
  for (const auto& r : roots) {
    if ((r * r - target) % modulus != 0) raise(Errc::Unreachable, "Hensel root fails substitution");
  }
  return static_cast<int>(roots.size());
}

}  // namespace conicval
