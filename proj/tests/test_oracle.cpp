#include "conicval/gauss.hpp"
#include "conicval/oracle.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace conicval;
using namespace testutil;

TEST_CASE("isotropy search") {
  auto f5 = GFContext::prime(5);
  auto pt = isotropy_search(GF(f5, 2), GF(f5, 3));
  REQUIRE(pt);
  CHECK((*pt)[0] == GF(f5, 1));
  CHECK((*pt)[1] == GF(f5, 1));
  CHECK((*pt)[2] == GF(f5, 0));
  CHECK_FALSE(isotropy_search(q(-1), q(-1), 50));
  auto p1 = isotropy_search(q(1), q(1), 5);
  REQUIRE(p1);
  auto check = (*p1)[0] * (*p1)[0] + (*p1)[1] * (*p1)[1];
  CHECK(check == (*p1)[2] * (*p1)[2]);
}

TEST_CASE("degree oracle") {
  auto f7 = GFContext::prime(7), f5 = GFContext::prime(5);
  using FRF = RationalFunction<GF>;
  CHECK(degree_oracle(FRF(fpoly(f7, {1, 0, 1}), fpoly(f7, {0, 1}))) == 2);
  CHECK(degree_oracle(FRF(fpoly(f5, {0, 0, 0, 1}))) == 3);
  CHECK(degree_oracle(FRF(fpoly(f5, {0, 1}))) == 1);
  FRF y(fpoly(f7, {0, 1, 0, 1}), fpoly(f7, {-1, 0, 1}));
  CHECK(degree_oracle(y) == 3);
  CHECK(degree_oracle(y) == subfield_degree(y).degree);
  CHECK_THROWS_AS(degree_oracle(FRF(fpoly(f7, {3}))), MathError);
}

TEST_CASE("Hensel count") {
  CHECK(hensel_count(5, q(11), 4) == 2);
  CHECK(hensel_count(5, q(2), 4) == 0);
  CHECK(hensel_count(5, q(9), 4) == 2);
  CHECK(hensel_count(5, q(11, 25), 5) == 2);
  CHECK_THROWS_AS(hensel_count(5, q(11), 3), MathError);
  CHECK_THROWS_AS(hensel_count(5, q(10), 4), MathError);
}

TEST_CASE("axiom fuzz detects a corrupted evaluator") {
  GaussExtension<PAdicValuation> w(PAdicValuation(3));
  using QX = RationalFunction<Rational>;
  std::function<QX(std::mt19937_64&)> sample = [](std::mt19937_64& rng) {
    std::uniform_int_distribution<long> c(-20, 20);
    return xpoly<Rational>({q(c(rng)), q(c(rng)), q(c(rng)) * q(3)});
  };
  std::function<QX(const QX&, const QX&)> mul = [](const QX& a, const QX& b) { return a * b; };
  std::function<QX(const QX&, const QX&)> add = [](const QX& a, const QX& b) { return a + b; };
  std::function<std::string(const QX&)> fmt = [](const QX& a) { return a.to_string("x"); };
  std::function<Value(const QX&)> good = [&](const QX& a) { return w.value(a); };
  auto ok = valuation_axiom_fuzz<QX>("gauss", sample, mul, add, good, fmt, 1000, 17);
  CHECK(ok.agreement);
  CHECK(ok.checks > 900);
  auto again = valuation_axiom_fuzz<QX>("gauss", sample, mul, add, good, fmt, 1000, 17);
  CHECK(again.inputs_digest == ok.inputs_digest);
  std::function<Value(const QX&)> bad = [&](const QX& a) {
    Value v = w.value(a);
    return a.num().degree() % 2 == 1 ? v + Value::integer(1) : v;
  };
  auto broken = valuation_axiom_fuzz<QX>("corrupted", sample, mul, add, bad, fmt, 1000, 17);
  CHECK_FALSE(broken.agreement);
  CHECK(broken.counterexample.has_value());
}
