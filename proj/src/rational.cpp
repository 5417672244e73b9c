#include "conicval/rational.hpp"

#include "conicval/error.hpp"
#include "conicval/integer.hpp"

namespace conicval {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) raise(Errc::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of 0");
  return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(out);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) raise(Errc::DivisionByZero, "rational division by 0");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const { return q_.get_str(); }

bool is_square(const Rational& x) { return sqrt(x).has_value(); }

std::optional<Rational> sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  auto [n, nok] = integer_sqrt(x.numerator());
  if (!nok) return std::nullopt;
  auto [d, dok] = integer_sqrt(x.denominator());
  if (!dok) return std::nullopt;
  return Rational(n, d);
}

}  // namespace conicval
