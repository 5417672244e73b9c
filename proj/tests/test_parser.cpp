#include <random>

#include "conicval/descriptors.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace conicval;
using namespace testutil;

namespace {

std::string random_text(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  std::uniform_int_distribution<int> small(0, 9);
  switch (pick(rng)) {
    case 0:
      return std::to_string(small(rng));
    case 1:
      return vars.empty() ? std::to_string(small(rng) + 1) : vars[rng() % vars.size()];
    case 2:
      return random_text(rng, vars, depth - 1) + " + " + random_text(rng, vars, depth - 1);
    case 3:
      return random_text(rng, vars, depth - 1) + " - " + random_text(rng, vars, depth - 1);
    case 4:
      return "(" + random_text(rng, vars, depth - 1) + ")*(" + random_text(rng, vars, depth - 1) + ")";
    case 5:
      return "(" + random_text(rng, vars, depth - 1) + ")/(" + std::to_string(small(rng) + 1) + " + " +
             (vars.empty() ? "1" : vars[rng() % vars.size()]) + "^2)";
    case 6:
      return "-(" + random_text(rng, vars, depth - 1) + ")";
    default:
      return "(" + random_text(rng, vars, depth - 1) + ")^" + std::to_string(small(rng) % 3);
  }
}

}  // namespace

TEST_CASE("expression examples") {
  auto p = parse_qt("t^2 - 3*t + 1/2");
  CHECK(p.den().is_constant());
  CHECK(p.num().coefficients() == std::vector<Rational>{q(1, 2), q(-3), q(1)});
  auto r = parse_q_x("(x^2+1)/(x-1)");
  CHECK(r == xrf<Rational>({q(1), q(0), q(1)}, {q(-1), q(1)}));
  CHECK(parse_q_x("(x^2-1)/(x-1)").to_string("x") == "x + 1");
  CHECK(parse_rational("-2^2") == q(-4));
  CHECK(parse_rational("(-2)^2") == q(4));
  CHECK(parse_rational("2^-1 + 1/3") == q(5, 6));
  CHECK(parse_rational("2 - 3 - 4") == q(-5));
  CHECK(parse_rational("12/3/2") == q(2));
}

TEST_CASE("expression errors") {
  try {
    parse_rational("2 +");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::SyntaxError);
    CHECK(e.offset() == 3);
  }
  try {
    parse_qt("t + y");
    FAIL("expected an undeclared variable");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::UndeclaredVariable);
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse_rational("(1"), ParseError);
  CHECK_THROWS_AS(parse_rational("1 2"), ParseError);
  CHECK_THROWS_AS(parse_rational("x^y"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), MathError);
}

TEST_CASE("round trip on random expressions") {
  std::mt19937_64 rng(4242);
  auto f9 = GFContext::of_order(9);
  for (int i = 0; i < 1000; ++i) {
    const std::string text = random_text(rng, {"t"}, 4);
    RationalFunction<Rational> v(Rational{});
    try {
      v = parse_qt(text);
    } catch (const MathError&) {
      continue;
    }
    CHECK_MESSAGE(parse_qt(v.to_string("t")) == v, text);
  }
  for (int i = 0; i < 300; ++i) {
    const std::string text = random_text(rng, {"t", "u"}, 3);
    try {
      auto v = parse_fqt(f9, text);
      CHECK_MESSAGE(parse_fqt(f9, v.to_string("t")) == v, text);
    } catch (const MathError&) {
    }
  }
  for (int i = 0; i < 300; ++i) {
    const std::string text = random_text(rng, {"t", "x"}, 3);
    try {
      auto v = parse_qt_x(text);
      CHECK_MESSAGE(parse_qt_x(v.to_string("x", "t")) == v, text);
    } catch (const MathError&) {
    }
  }
}

TEST_CASE("field and valuation descriptors") {
  CHECK(parse_field("Q").kind == FieldDesc::Kind::Q);
  CHECK(parse_field("Q(t)").kind == FieldDesc::Kind::Qt);
  auto f = parse_field("Fq(t):q=9");
  CHECK(f.kind == FieldDesc::Kind::Fqt);
  CHECK(f.ctx->order() == 9);
  auto g = parse_field("GF(3)[u]/(u^2+1)");
  CHECK(g.ctx->modulus() == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(parse_field("GF(25)").ctx->degree() == 2);
  CHECK_THROWS_AS(parse_field("GF(6)"), UsageError);
  CHECK_THROWS_AS(parse_field("GF(3)[u]/(u^2+2)"), UsageError);
  CHECK_THROWS_AS(parse_field("R"), UsageError);

  auto v5 = parse_valuation("Q:p=5");
  CHECK(std::get<PAdicValuation>(v5).prime() == 5);
  CHECK_THROWS_AS(parse_valuation("Q:p=2"), UsageError);
  CHECK_THROWS_AS(parse_valuation("Q:p=9"), UsageError);
  CHECK_THROWS_AS(parse_valuation("Q:q=5"), UsageError);
  auto vt = parse_valuation("Q(t):place=t-2");
  CHECK(std::get<QtPlace>(vt).order(parse_qt("(t-2)^3/(t+1)")) == 3);
  auto vf = parse_valuation("Fq(t):q=3,place=t^2+1");
  CHECK(std::get<FqtPlace>(vf).order(parse_fqt(GFContext::prime(3), "t^4 + 2*t^2 + 1")) == 2);
  auto vi = parse_valuation("Fq(t):q=5,place=inf");
  CHECK(std::get<FqtPlace>(vi).order(parse_fqt(GFContext::prime(5), "t^3")) == -3);
  CHECK_THROWS_AS(parse_valuation("Fq(t):q=3,place=t^2+2"), UsageError);

  CHECK_NOTHROW(require_same_field(parse_field("Q(t)"), vt));
  CHECK_THROWS_AS(require_same_field(parse_field("Q"), vt), UsageError);
  CHECK_THROWS_AS(require_same_field(parse_field("Fq(t):q=5"), vf), UsageError);
}
