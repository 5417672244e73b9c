#include <random>

#include "conicval/integer.hpp"
#include "conicval/quaternion.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace conicval;
using namespace testutil;

namespace {

// x^2 + y^2 + z^2 = 0 mod 8 has only solutions with every coordinate even.
bool sum_of_three_squares_mod8_forces_even() {
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int z = 0; z < 8; ++z)
        if ((x * x + y * y + z * z) % 8 == 0 && (x % 2 || y % 2 || z % 2)) return false;
  return true;
}

}  // namespace

TEST_CASE("Hilbert symbols") {
  CHECK(hilbert_symbol(q(-1), q(-1), QPlace::real()) == -1);
  REQUIRE(sum_of_three_squares_mod8_forces_even());
  CHECK(hilbert_symbol(q(-1), q(-1), QPlace::at(2)) == -1);
  CHECK(legendre(3, 5) == -1);
  CHECK(hilbert_symbol(q(5), q(3), QPlace::at(5)) == -1);
  CHECK(hilbert_symbol(q(2), q(3), QPlace::at(3)) == -1);
  CHECK(hilbert_symbol(q(1, 2), q(3, 7), QPlace::at(7)) == hilbert_symbol(q(2), q(21), QPlace::at(7)));
}

TEST_CASE("Hilbert product formula") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> n(-10000, 10000), d(1, 10000);
  for (int i = 0; i < 200; ++i) {
    Rational a = q(n(rng) | 1, d(rng)), b = q(n(rng) | 1, d(rng));
    int prod = 1;
    for (const auto& pl : relevant_places({a, b})) prod *= hilbert_symbol(a, b, pl);
    CHECK(prod == 1);
  }
}

TEST_CASE("splitting over Q") {
  auto s = is_split(q(-1), q(-1));
  CHECK_FALSE(s.split);
  CHECK_FALSE(s.point);
  auto t = is_split(q(-1), q(2));
  CHECK(t.split);
  REQUIRE(t.point);
  CHECK((*t.point)[0] == q(1));
  CHECK((*t.point)[1] == q(1));
  CHECK((*t.point)[2] == q(1));
  auto u = find_rational_point(q(1), q(1), 10);
  REQUIRE(u);
  CHECK((*u)[0] == q(1));
  CHECK((*u)[1] == q(0));
  CHECK((*u)[2] == q(1));
}

TEST_CASE("is_split over Q agrees with point search") {
  for (long a = -12; a <= 12; ++a) {
    for (long b = -12; b <= 12; ++b) {
      if (a == 0 || b == 0) continue;
      auto s = is_split(q(a), q(b), 60);
      auto pt = find_rational_point(q(a), q(b), 60);
      if (pt) CHECK(s.split);
      if (s.split) CHECK(pt.has_value());
    }
  }
}

TEST_CASE("splitting over a finite field") {
  auto f5 = GFContext::prime(5);
  auto s = is_split(GF(f5, 2), GF(f5, 3));
  CHECK(s.split);
  REQUIRE(s.point);
  CHECK((*s.point)[0] == GF(f5, 1));
  CHECK((*s.point)[1] == GF(f5, 1));
  CHECK((*s.point)[2] == GF(f5, 0));
}

TEST_CASE("splitting over F_q(t) by tame symbols") {
  auto f3 = GFContext::prime(3);
  using FRF = RationalFunction<GF>;
  FRF t(fpoly(f3, {0, 1})), one(fpoly(f3, {1})), two(fpoly(f3, {2}));
  CHECK(is_split(t, one).split);
  // (t, 2) over F_3(t): ramified at t and at infinity
  auto s = is_split(t, two);
  CHECK_FALSE(s.split);
  int prod = 1;
  for (const auto& sym : s.symbols) prod *= sym.symbol;
  CHECK(prod == 1);
  CHECK_THROWS_AS(is_split(qrf({1}), qrf({1})), MathError);
}

TEST_CASE("quaternion isomorphism over Q") {
  CHECK(quaternion_isomorphic(q(-1), q(-1), q(-1), q(-2)));
  CHECK_FALSE(quaternion_isomorphic(q(-1), q(-1), q(-1), q(2)));
  CHECK(quaternion_isomorphic(q(3), q(7, 5), q(7, 5), q(3)));
}

TEST_CASE("normalization") {
  QtPlace vt(qpoly({0, 1}));
  auto n = normalize(vt, qrf({0, 0, 0, 1}), qrf({0, 0, 4}));
  CHECK(n.shape == Shape::OddUnit);
  CHECK(n.a == qrf({0, 1}));
  CHECK(n.b == qrf({4}));
  auto m = normalize(vt, qrf({0, 1}), qrf({0, 3}));
  CHECK(m.shape == Shape::OddUnit);
  CHECK(m.a == qrf({0, 1}));
  CHECK(m.b == qrf({-3}));
  auto [ra, rb] = replay(m.transcript, qrf({0, 1}), qrf({0, 3}));
  CHECK(ra == m.a);
  CHECK(rb == m.b);
  auto s = normalize(vt, qrf({1}), qrf({0, 1}));
  CHECK(s.a == qrf({0, 1}));
  CHECK(s.b == qrf({1}));

  PAdicValuation v5(5);
  auto p = normalize(v5, q(2), q(3));
  CHECK(p.shape == Shape::UnitUnit);
  CHECK(p.transcript.empty());
  auto neg = normalize(v5, q(1, 125), q(3));
  CHECK(neg.a == q(5));
  CHECK(v5.order(neg.a) == 1);
}

TEST_CASE("residue algebra") {
  QtPlace vt(qpoly({0, 1}));
  auto [a, b] = residue_algebra(vt, qrf({-1}), qrf({-1}));
  CHECK(a == q(-1));
  CHECK(b == q(-1));
  auto f7 = GFContext::prime(7);
  FqtPlace v(fpoly(f7, {0, 1}));
  using FRF = RationalFunction<GF>;
  auto [c, d] = residue_algebra(v, FRF(fpoly(f7, {3})), FRF(fpoly(f7, {1, 1})));
  CHECK(c == GF(f7, 3));
  CHECK(d == GF(f7, 1));
  CHECK_THROWS_AS(residue_algebra(vt, qrf({0, 1}), qrf({1})), MathError);
}

TEST_CASE("deciding unramified extensions") {
  QtPlace vt(qpoly({0, 1}));
  CHECK(decide_unramified_extension(vt, qrf({-1}), qrf({-1})).kind == VerdictKind::UnramifiedExtension);
  CHECK(decide_unramified_extension(vt, qrf({0, 1}), qrf({3})).kind == VerdictKind::RamifiedOnly);
  CHECK(decide_unramified_extension(vt, qrf({0, 1}), qrf({1})).kind == VerdictKind::NoExtensionAlgebraSplit);
  CHECK(decide_unramified_extension(vt, qrf({0, 1}), qrf({1, -1})).kind == VerdictKind::NoExtensionSplitResidue);
  PAdicValuation v5(5);
  auto d = decide_unramified_extension(v5, q(2), q(3));
  CHECK(d.kind == VerdictKind::NoExtensionSplitResidue);
  REQUIRE(d.residue_split);
  CHECK(d.residue_split->point.has_value());
  CHECK(decide_unramified_extension(v5, q(2), q(5)).kind == VerdictKind::RamifiedOnly);
  CHECK(decide_unramified_extension(v5, q(-1), q(-1)).kind == VerdictKind::NoExtensionSplitResidue);
  CHECK(decide_unramified_extension(v5, q(-1), q(2)).kind == VerdictKind::NoExtensionAlgebraSplit);
}
