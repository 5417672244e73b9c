#include <random>

#include "conicval/gauss.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace conicval;
using namespace testutil;

namespace {

using QX = RationalFunction<Rational>;

QX qx(std::vector<Rational> num, std::vector<Rational> den = {Rational(1)}) { return xrf(num, den); }

}  // namespace

TEST_CASE("Gauss values from coefficient minima") {
  GaussExtension w3(PAdicValuation(3));
  CHECK(w3.value(qx({q(3), q(9), q(27)})) == Value::integer(1));
  CHECK(w3.value(qx({q(1), q(3)}, {q(3), q(0), q(1)})) == Value::integer(0));
  CHECK(w3.value(w3.zero()).is_infinite());

  GaussExtension wt{QtPlace(qpoly({0, 1}))};
  QtX h = xpoly<QtElem>({qrf({0, 0, 0, 1}), qrf({0}), qrf({0, 1})});
  CHECK(wt.value(h) == Value::integer(1));
}

TEST_CASE("Gauss residues") {
  GaussExtension w5(PAdicValuation(5));
  using R = RationalFunction<GF>;
  auto f5 = w5.base().residue_context();
  R xbar = R::variable(GF(f5, 0));
  CHECK(w5.residue(qx({q(5), q(1)}, {q(1), q(1)})) == xbar / (xbar + R::constant(GF(f5, 1))));
  CHECK(w5.residue(qx({q(1), q(5)}, {q(10), q(1)})) == xbar.inverse());
  CHECK_THROWS_AS(w5.residue(qx({q(5)})), MathError);

  GaussExtension wt{QtPlace(qpoly({0, 1}))};
  QtX h = xrf<QtElem>({qrf({0, 1}), qrf({0}), qrf({1})}, {qrf({1}), qrf({0, 1})});
  auto r = wt.residue(h);
  CHECK(r == RationalFunction<Rational>(qpoly({0, 0, 1})));
  CHECK(wt.format_residue(r) == "Y^2");
}

TEST_CASE("Gauss extension with a pivot") {
  auto v5 = PAdicValuation(5);
  auto w = GaussExtension<PAdicValuation>::with_pivot(v5, qx({q(0), q(5)}));
  CHECK(w.value(qx({q(0), q(1)})) == Value::integer(-1));
  auto id = GaussExtension<PAdicValuation>::with_pivot(v5, qx({q(0), q(1)}));
  CHECK(id.pivot_kind() == GaussExtension<PAdicValuation>::PivotKind::Identity);

  QtPlace vt(qpoly({0, 1}));
  QtElem t = qrf({0, 1});
  auto wt = GaussExtension<QtPlace>::with_pivot(vt, xpoly<QtElem>({-t, t}));
  CHECK(wt.value(xpoly<QtElem>({qrf({-1}), qrf({1})})) == Value::integer(-1));
  auto r = wt.residue(xpoly<QtElem>({-t, t}));
  CHECK(r == RationalFunction<Rational>::variable(Rational()));
  CHECK_THROWS_AS(GaussExtension<QtPlace>::with_pivot(vt, xpoly<QtElem>({t})), MathError);
  CHECK_THROWS_AS(GaussExtension<QtPlace>::with_pivot(vt, xpoly<QtElem>({t, t, t})), MathError);
}

TEST_CASE("square pivot evaluates even functions") {
  auto v5 = PAdicValuation(5);
  auto w = GaussExtension<PAdicValuation>::on_square(v5, q(1, 25));
  // Y = X^2/25, so X^2 = 25 Y has value 2
  CHECK(w.value(qx({q(0), q(0), q(1)})) == Value::integer(2));
  CHECK_THROWS_AS(w.value(qx({q(0), q(1)})), MathError);
  CHECK(w.value(qx({q(1)}, {q(25), q(0), q(1)})) == Value::integer(-2));
}

TEST_CASE("Gauss valuation axioms on random rational functions") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-30, 30);
  auto rnd = [&]() {
    std::vector<Rational> n, d;
    for (int i = 0; i < 3; ++i) n.push_back(q(c(rng)) * q(3).pow(c(rng) % 3));
    for (int i = 0; i < 2; ++i) d.push_back(q(c(rng)) / q(3).pow(c(rng) % 2));
    d.push_back(q(1));
    return qx(n, d);
  };
  GaussExtension w(PAdicValuation(3));
  for (int i = 0; i < 500; ++i) {
    QX a = rnd(), b = rnd();
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(w.value(a * b) == w.value(a) + w.value(b));
    CHECK(w.value(a + b) >= std::min(w.value(a), w.value(b)));
    auto ua = w.unit_part(a), ub = w.unit_part(b);
    CHECK(w.residue(ua.unit * ub.unit) == w.residue(ua.unit) * w.residue(ub.unit));
    CHECK(w.residue(w.lift(w.residue(ua.unit))) == w.residue(ua.unit));
  }
}

TEST_CASE("subfield degree") {
  auto d = subfield_degree(qx({q(1), q(0), q(1)}, {q(0), q(1)}));
  CHECK(d.degree == 2);
  CHECK(d.integral);
  auto e = subfield_degree(qx({q(1)}, {q(0), q(1)}));
  CHECK(e.degree == 1);
  CHECK_FALSE(e.integral);
  CHECK(subfield_degree(qx({q(0), q(1), q(0), q(1)}, {q(-1), q(0), q(1)})).degree == 3);
  CHECK_THROWS_AS(subfield_degree(qx({q(4)})), MathError);
  QX y = qx({q(2), q(0), q(3), q(1)}, {q(1), q(1)});
  CHECK(subfield_degree(y).degree == subfield_degree(y.inverse()).degree);
  CHECK(subfield_degree(y).degree == subfield_degree(y + QX::constant(q(7))).degree);
}

TEST_CASE("quadratic extension trichotomy") {
  PAdicValuation v5(5);
  auto r2 = quadratic_extension_analysis(v5, q(2));
  CHECK(r2.kind == QuadraticKind::Inert);
  CHECK(quadratic_extension_analysis(v5, q(11)).kind == QuadraticKind::SplitPair);
  CHECK(quadratic_extension_analysis(v5, q(10)).kind == QuadraticKind::Ramified);
  CHECK_THROWS_AS(quadratic_extension_analysis(v5, q(9)), MathError);
  CHECK(quadratic_extension_analysis(v5, q(2, 25)).unit == q(2));

  // Over a Gauss extension: a x^2 + b with pivot t x at v_t, (a,b) = (t,1)
  QtPlace vt(qpoly({0, 1}));
  QtElem t = qrf({0, 1});
  auto w = GaussExtension<QtPlace>::with_pivot(vt, xpoly<QtElem>({qrf({0}), t}));
  QtX f = xpoly<QtElem>({qrf({1}), qrf({0}), t});
  auto qa = quadratic_extension_analysis(w, f);
  CHECK(qa.kind == QuadraticKind::Ramified);
  CHECK(qa.value == -1);
}
