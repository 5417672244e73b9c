#include <random>

#include "conicval/conic.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace conicval;
using namespace testutil;

namespace {

QtPlace vt() { return QtPlace(qpoly({0, 1})); }
QtElem t() { return qrf({0, 1}); }
QtElem c(long n, long d = 1) { return QtElem::constant(q(n, d)); }

}  // namespace

TEST_CASE("value groups") {
  DistinguishedExtension<QtPlace> e1(vt(), t(), c(1));
  CHECK(e1.value_group() == ValueGroup::half_integers());
  auto reps = e1.coset_representatives();
  CHECK(reps[0] == Value::integer(0));
  CHECK(reps[1] == Value::halves(1));
  CHECK(reps[2] == Value::integer(0));
  CHECK(reps[3] == Value::halves(1));
  CHECK(DistinguishedExtension<QtPlace>(vt(), c(-1), c(-1)).value_group() == ValueGroup::integers());
  CHECK(DistinguishedExtension<QtPlace>(vt(), t(), t()).value_group() == ValueGroup::half_integers());
}

TEST_CASE("residue field descriptions") {
  DistinguishedExtension<QtPlace> e(vt(), c(-1), c(-1));
  const auto& d = e.residue_field();
  CHECK(d.conic);
  CHECK(*d.a0bar == q(-1));
  CHECK(*d.b0bar == q(-1));
  CHECK(e.relation_text() == "S^2 = -T^2 - 1");

  DistinguishedExtension<QtPlace> r(vt(), t(), c(1));
  CHECK_FALSE(r.residue_field().conic);
  CHECK(r.case_tag() == CaseTag::Case2B);
  CHECK(r.relation_text() == "z = r^2 - 1");
  CHECK(*r.residue_field().unit == c(1));

  DistinguishedExtension<PAdicValuation> p(PAdicValuation(5), q(10), q(15));
  CHECK(p.case_tag() == CaseTag::Case2AB);
  CHECK(*p.residue_field().unit == q(6));
  CHECK(p.residue_field().unit_residue->is_one());
  CHECK(p.relation_text() == "z = r^2");

  DistinguishedExtension<PAdicValuation> a(PAdicValuation(5), q(3), q(5));
  CHECK(a.case_tag() == CaseTag::Case2A);
  CHECK(a.relation_text() == "z = 3/(r^2 + 2)");
}

TEST_CASE("w* on basis elements and examples") {
  DistinguishedExtension<QtPlace> e(vt(), c(-1), c(-1));
  using Elem = ConicElement<QtElem>;
  Elem txs{xpoly<QtElem>({qrf({0}), t()}), xpoly<QtElem>({c(1)})};
  CHECK(e.value(txs) == Value::integer(0));
  // multiplicativity against the conjugate: (t x + s)(t x - s) = (t^2 + 1) x^2 + 1
  Elem conj = e.conjugate(txs);
  auto prod = e.mul(txs, conj);
  CHECK(prod.g.is_zero());
  CHECK(prod.f == xpoly<QtElem>({c(1), qrf({0}), qrf({1, 0, 1})}));
  CHECK(e.value(prod) == e.value(txs) + e.value(conj));

  DistinguishedExtension<QtPlace> r(vt(), t(), qrf({0, 0, 1}));
  // w(x) = (v(b) - v(a))/2 = 1/2
  CHECK(r.value(r.x()) == Value::halves(1));
  auto s2 = r.mul(r.s(), r.s());
  CHECK(r.value(s2) == Value::integer(2));
  CHECK(r.value(s2) == r.value(r.s()) + r.value(r.s()));
  CHECK_THROWS_AS(eval_w_star(r, ConicElement<QtElem>{QtX(c(0)), QtX(c(0))}), MathError);
}

TEST_CASE("w* residues in the conic case") {
  DistinguishedExtension<QtPlace> e(vt(), c(-1), c(-1));
  auto T = QRF::variable(q(0));
  auto rx = e.residue(e.x());
  CHECK(rx.A == T);
  CHECK(rx.B.is_zero());
  auto rs = e.residue(e.s());
  CHECK(rs.A.is_zero());
  CHECK(rs.B.is_one());
  // (x^2 + s)/(1 + x^2)
  QtX den = xpoly<QtElem>({c(1), c(0), c(1)});
  ConicElement<QtElem> el{xpoly<QtElem>({c(0), c(0), c(1)}) / den, QtX::constant(c(1)) / den};
  auto r = e.residue(el);
  QRF onePlusT2 = QRF(qpoly({1, 0, 1}));
  CHECK(r.A == T * T / onePlusT2);
  CHECK(r.B == onePlusT2.inverse());
  CHECK(e.format_residue(r) == "(T^2/(T^2 + 1)) + (1/(T^2 + 1))*S");
  // S^2 = -T^2 - 1
  auto s2 = e.residue_mul(rs, rs);
  CHECK(s2.A == QRF(qpoly({-1, 0, -1})));
  CHECK(e.residue(e.mul(e.s(), e.s())) == s2);
  CHECK_THROWS_AS(e.residue(e.from_base(t())), MathError);
}

TEST_CASE("w* residues in the rational cases") {
  DistinguishedExtension<QtPlace> r(vt(), t(), c(1));
  auto rr = r.residue(r.s());
  CHECK(rr.A == QRF::variable(q(0)));
  DistinguishedExtension<PAdicValuation> p(PAdicValuation(5), q(10), q(15));
  auto px = p.residue(p.mul(p.from_base(q(2)), p.x()));
  // theta = a lambda x = 2 x; 2x has residue r
  CHECK(px.A == RationalFunction<GF>::variable(GF(GFContext::prime(5), 0)));
}

TEST_CASE("families of rational-residue extensions") {
  auto fam = rational_residue_family(vt(), t(), c(1), 3);
  REQUIRE(fam.size() == 3);
  CHECK(fam[0].pivot == xpoly<QtElem>({c(0), t()}));
  CHECK(fam[1].vc == 2);
  CHECK(fam[2].vc == 3);

  auto fam2 = rational_residue_family(PAdicValuation(5), q(2), q(3), 2);
  REQUIRE(fam2.size() == 2);
  CHECK(fam2[0].vc == -1);
  CHECK(fam2[1].vc == -2);
  REQUIRE(fam2[0].conic_point);
  CHECK(fam2[0].conic_point->second == q(2));
  CHECK(fam2[0].conic_point->first == q(1));
  CHECK(rational_residue_family(PAdicValuation(5), q(2), q(3), 0).empty());
  CHECK_THROWS_AS(rational_residue_family(vt(), c(-1), c(-1), 2), MathError);

  // (1, t) : v(b) odd with v(a) even
  auto fam3 = rational_residue_family(vt(), c(1), t(), 2);
  CHECK(fam3[0].vc == -1);
  CHECK(fam3[1].vc == -2);

  // (1, 2) over F_3: only the point at infinity works
  auto f3 = GFContext::prime(3);
  FqtPlace v3(fpoly(f3, {0, 1}));
  using FRF = RationalFunction<GF>;
  auto fam4 = rational_residue_family(v3, FRF(fpoly(f3, {1})), FRF(fpoly(f3, {2})), 2);
  CHECK(fam4[0].at_infinity);
}

TEST_CASE("analyze") {
  auto rep = analyze(vt(), c(-1), c(-1));
  CHECK(rep.present);
  CHECK(rep.extension.value_group() == ValueGroup::integers());
  auto r2 = analyze(PAdicValuation(5), q(2), q(3));
  CHECK_FALSE(r2.present);
  CHECK(r2.verdict.kind == VerdictKind::NoExtensionSplitResidue);
  CHECK(r2.family.size() == 3);
  auto r3 = analyze(vt(), t(), c(3));
  CHECK_FALSE(r3.present);
  CHECK(r3.verdict.kind == VerdictKind::RamifiedOnly);
  CHECK_FALSE(r3.extension.residue_field().conic);
}
