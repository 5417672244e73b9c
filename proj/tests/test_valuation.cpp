#include <random>

#include "conicval/valuation.hpp"
#include "doctest.h"

using namespace conicval;

namespace {

using QPoly = Polynomial<Rational>;
using QRF = RationalFunction<Rational>;

QPoly qpoly(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return QPoly(v, Rational());
}

Polynomial<GF> fpoly(const GFContextPtr& ctx, std::initializer_list<long> cs) {
  std::vector<GF> v;
  for (long c : cs) v.emplace_back(ctx, c);
  return Polynomial<GF>(v, GF(ctx, 0));
}

Rational q(long n, long d = 1) { return Rational(n) / Rational(d); }

}  // namespace

TEST_CASE("p-adic values and residues") {
  PAdicValuation v5(5);
  CHECK(v5.value(q(50, 3)) == Value::integer(2));
  CHECK(v5.value(Rational()).is_infinite());
  CHECK(v5.residue(q(7, 3)) == GF(v5.residue_context(), 4));
  CHECK_THROWS_AS(v5.residue(q(1, 5)), MathError);
  auto up = v5.unit_part(q(75, 2));
  CHECK(up.exponent == 2);
  CHECK(up.unit == q(3, 2));
  CHECK_THROWS_AS(PAdicValuation(2), UsageError);
}

TEST_CASE("places of Q(t)") {
  QtPlace vt(qpoly({0, 1}));
  QRF x(qpoly({0, 1, 1}), qpoly({-1, 1}));
  CHECK(vt.value(x) == Value::integer(1));
  CHECK(vt.residue(QRF(qpoly({1, 1}), qpoly({2, -1}))) == q(1, 2));
  auto up = vt.unit_part(QRF(qpoly({0, 0, 0, 1, 1})));
  CHECK(up.exponent == 3);
  CHECK(up.unit == QRF(qpoly({1, 1})));
  CHECK_THROWS_AS(QtPlace(qpoly({1, 0, 1})), MathError);
  QtPlace vt2(qpoly({-2, 1}));
  CHECK(vt2.residue(QRF(qpoly({0, 1}))) == q(2));
  CHECK(vt2.describe() == "Q(t):place=t - 2");
}

TEST_CASE("places of F_q(t)") {
  auto f3 = GFContext::prime(3);
  FqtPlace inf(GF(f3, 0));
  using FRF = RationalFunction<GF>;
  FRF x(fpoly(f3, {1, 0, 1}), fpoly(f3, {0, 0, 0, 0, 0, 1}));
  CHECK(inf.value(x) == Value::integer(3));
  auto up = inf.unit_part(FRF(fpoly(f3, {1, 0, 1})));
  CHECK(up.exponent == -2);
  // 1 + 1/t^2 = (t^2 + 1)/t^2
  CHECK(up.unit == FRF(fpoly(f3, {1, 0, 1}), fpoly(f3, {0, 0, 1})));
  CHECK(inf.value(up.unit) == Value::integer(0));

  FqtPlace vp(fpoly(f3, {1, 0, 1}));
  GF r = vp.residue(FRF(fpoly(f3, {0, 1})));
  CHECK(r.context()->describe() == "GF(3)[u]/(u^2 + 1)");
  CHECK(r == GF::generator(r.context()));
  CHECK(vp.lift(r) == FRF(fpoly(f3, {0, 1})));
  CHECK_THROWS_AS(FqtPlace(fpoly(f3, {1, 1, 1})), UsageError);  // (t+2)^2 over F_3
}

TEST_CASE("higher-degree place over a non-prime constant field") {
  auto f9 = GFContext::of_order(9);
  // t^2 - u is irreducible over F_9 when u is a nonsquare
  GF u = GF::generator(f9);
  for (const auto& c : enumerate_field(f9)) {
    if (!c.is_zero() && !is_square(c)) {
      u = c;
      break;
    }
  }
  REQUIRE_FALSE(is_square(u));
  Polynomial<GF> pi(std::vector<GF>{-u, GF(f9, 0), GF(f9, 1)}, GF(f9, 0));
  FqtPlace v(pi);
  CHECK(v.residue_field_name() == GFContext::of_order(81)->describe());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> pick(0, 80);
  for (int i = 0; i < 200; ++i) {
    GF r = GF::from_index(v.residue_zero().context(), pick(rng));
    auto lifted = v.lift(r);
    CHECK(v.residue(lifted) == r);
  }
  // residue is a ring homomorphism
  using FRF = RationalFunction<GF>;
  FRF a(Polynomial<GF>(std::vector<GF>{u, GF(f9, 1), GF(f9, 2)}, GF(f9, 0)));
  FRF b(Polynomial<GF>(std::vector<GF>{GF(f9, 1), u * u, u}, GF(f9, 0)));
  CHECK(v.residue(a * b) == v.residue(a) * v.residue(b));
  CHECK(v.residue(a + b) == v.residue(a) + v.residue(b));
}

TEST_CASE("ultrametric law on random pairs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-20, 20);
  auto random_rf = [&]() {
    std::vector<Rational> n, d;
    for (int i = 0; i < 4; ++i) n.emplace_back(coef(rng));
    for (int i = 0; i < 3; ++i) d.emplace_back(coef(rng));
    d.back() = Rational(1);
    return QRF(QPoly(n, Rational()), QPoly(d, Rational()));
  };
  QtPlace vt(qpoly({0, 1}));
  QtPlace inf{Rational()};
  PAdicValuation v3(3);
  for (int i = 0; i < 10000; ++i) {
    QRF x = random_rf(), y = random_rf();
    for (const QtPlace* v : {&vt, &inf}) {
      Value vx = v->value(x), vy = v->value(y), vs = v->value(x + y);
      CHECK(vs >= std::min(vx, vy));
      if (vx != vy) CHECK(vs == std::min(vx, vy));
      CHECK(v->value(x * y) == vx + vy);
    }
    Rational a = Rational(coef(rng) * 9) / Rational(coef(rng) | 1);
    Rational b = Rational(coef(rng)) / Rational((coef(rng) * 3) | 1);
    Value va = v3.value(a), vb = v3.value(b), vs = v3.value(a + b);
    CHECK(vs >= std::min(va, vb));
    if (va != vb) CHECK(vs == std::min(va, vb));
  }
}

TEST_CASE("unit part round trip") {
  QtPlace inf{Rational()};
  QRF x(qpoly({3, 0, 5, 1}), qpoly({0, 0, 1}));
  auto up = inf.unit_part(x);
  CHECK(inf.uniformizer_power(up.exponent) * up.unit == x);
  CHECK(inf.value(up.unit) == Value::integer(0));
}
