#include "conicval/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "conicval/conic.hpp"
#include "conicval/hilbert.hpp"
#include "conicval/integer.hpp"
#include "conicval/sampling.hpp"

namespace conicval {

namespace {

constexpr std::size_t kMaxFailures = 5;

struct Recorder {
  SuiteResult& r;

  void check(bool ok, const std::function<std::string()>& message) {
    ++r.checks;
    if (ok) return;
    r.passed = false;
    if (r.failures.size() < kMaxFailures) r.failures.push_back(message());
  }
  void fail(const std::string& message) {
    check(false, [&] { return message; });
  }
};

long count_or(const SuiteOptions& o, long fallback) { return o.samples > 0 ? o.samples : fallback; }

// ---- independent valuation of polynomial coefficients ------------------

long direct_order(const PAdicValuation& v, const Rational& c) {
  const mpz_class p(static_cast<unsigned long>(v.prime()));
  long k = 0;
  mpz_class n = c.numerator(), d = c.denominator();
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  while (d % p == 0) {
    d /= p;
    --k;
  }
  return k;
}

template <class K>
long poly_multiplicity(const Polynomial<K>& f, const Polynomial<K>& pi) {
  long k = 0;
  Polynomial<K> g = f;
  for (;;) {
    auto [q, r] = g.divmod(pi);
    if (!r.is_zero()) return k;
    g = q;
    ++k;
  }
}

template <class K>
long direct_order(const PlaceValuation<K>& v, const RationalFunction<K>& c) {
  if (v.is_infinite()) return static_cast<long>(c.den().degree()) - static_cast<long>(c.num().degree());
  return poly_multiplicity(c.num(), *v.place()) - poly_multiplicity(c.den(), *v.place());
}

template <class V>
void gauss_formula_for(Recorder& rec, const V& v, long n, Rng& rng) {
  using E = typename V::Element;
  GaussExtension<V> w(v);
  for (long i = 0; i < n; ++i) {
    auto p = random_coefficient_polynomial(rng, v, 5);
    long direct = 0;
    bool first = true;
    for (const auto& c : p.coefficients()) {
      if (c.is_zero()) continue;
      const long o = direct_order(v, c);
      if (first || o < direct) direct = o;
      first = false;
    }
    const Value got = w.value(RationalFunction<E>(p));
    rec.check(got == Value::integer(direct), [&] {
      return v.describe() + ": gauss value " + got.to_string() + " but direct minimum " + std::to_string(direct) +
             " for " + w.format(RationalFunction<E>(p));
    });
  }
}

void suite_gauss_formula(Recorder& rec, const SuiteOptions& o) {
  Rng rng(o.seed);
  const long n = count_or(o, 10000);
  const Rational q0;
  gauss_formula_for(rec, PAdicValuation(3), n, rng);
  gauss_formula_for(rec, PAdicValuation(5), n, rng);
  gauss_formula_for(rec, PAdicValuation(13), n, rng);
  gauss_formula_for(rec, QtPlace(Polynomial<Rational>({Rational(0), Rational(1)}, q0)), n, rng);
  gauss_formula_for(rec, QtPlace(Polynomial<Rational>({Rational(-2), Rational(1)}, q0)), n, rng);
  gauss_formula_for(rec, QtPlace(q0), n, rng);
  auto f3 = GFContext::prime(3), f5 = GFContext::prime(5), f9 = GFContext::of_order(9);
  gauss_formula_for(rec, FqtPlace(Polynomial<GF>({GF(f3, 0), GF(f3, 1)}, GF(f3, 0))), n, rng);
  gauss_formula_for(rec, FqtPlace(Polynomial<GF>({GF(f5, 2), GF(f5, 0), GF(f5, 1)}, GF(f5, 0))), n, rng);
  gauss_formula_for(rec, FqtPlace(GF(f9, 0)), n, rng);
}

void suite_hilbert_product(Recorder& rec, const SuiteOptions& o) {
  Rng rng(o.seed);
  const long n = count_or(o, 200);
  auto draw = [&] {
    Rational r(mpz_class(uniform(rng, 1, 10000)), mpz_class(uniform(rng, 1, 10000)));
    return uniform(rng, 0, 1) ? r : -r;
  };
  for (long i = 0; i < n; ++i) {
    const Rational a = draw(), b = draw();
    int prod = 1;
    for (const auto& pl : relevant_places({a, b})) prod *= hilbert_symbol(a, b, pl);
    rec.check(prod == 1, [&] { return "product of symbols is -1 for (" + a.to_string() + ", " + b.to_string() + ")"; });
  }
}

void suite_finite_split(Recorder& rec, const SuiteOptions&) {
  for (long q : {3, 5, 7, 9, 11, 13, 25, 27, 49}) {
    auto ctx = GFContext::of_order(mpz_class(q));
    const auto elems = enumerate_field(ctx);
    for (const auto& a : elems) {
      if (a.is_zero()) continue;
      for (const auto& b : elems) {
        if (b.is_zero()) continue;
        auto res = is_split(a, b);
        bool ok = res.split && res.point.has_value();
        if (ok) {
          const auto& [x, y, z] = *res.point;
          ok = !(x.is_zero() && y.is_zero() && z.is_zero()) && a * x * x + b * y * y == z * z;
        }
        rec.check(ok, [&] {
          return "GF(" + std::to_string(q) + "): no verified point for (" + a.to_string() + ", " + b.to_string() + ")";
        });
      }
    }
  }
}

void suite_quadratic_hensel(Recorder& rec, const SuiteOptions&) {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    PAdicValuation v(p);
    std::set<std::pair<mpz_class, mpz_class>> seen;
    for (long n = -50; n <= 50; ++n) {
      if (n == 0) continue;
      for (long d = 1; d <= 50; ++d) {
        const Rational a{mpz_class(n), mpz_class(d)};
        if (!seen.emplace(a.numerator(), a.denominator()).second) continue;
        if (v.order(a) % 2 != 0) continue;
        const int roots = hensel_count(p, a, 4);
        if (is_square(a)) {
          ++rec.r.skipped;
          rec.check(roots == 2, [&] { return "square " + a.to_string() + " has " + std::to_string(roots) + " roots"; });
          continue;
        }
        const auto qa = quadratic_extension_analysis(v, a);
        const bool ok = (qa.kind == QuadraticKind::SplitPair && roots == 2) ||
                        (qa.kind == QuadraticKind::Inert && roots == 0);
        rec.check(ok, [&] {
          return "p = " + std::to_string(p) + ", a = " + a.to_string() + ": " + to_string(qa.kind) + " vs " +
                 std::to_string(roots) + " Hensel roots";
        });
      }
    }
  }
}

void suite_degree_formula(Recorder& rec, const SuiteOptions& o) {
  Rng rng(o.seed);
  auto f7 = GFContext::prime(7);
  const GF zero(f7, 0);
  const long n = count_or(o, 200);
  long done = 0;
  while (done < n) {
    auto num = random_polynomial(rng, zero, 5);
    auto den = random_polynomial(rng, zero, 5);
    if (den.is_zero()) continue;
    RationalFunction<GF> y(num, den);
    if (y.is_constant()) continue;
    ++done;
    const int formula = subfield_degree(y).degree;
    const int oracle = degree_oracle(y);
    rec.check(formula == oracle, [&] {
      return "Y = " + y.to_string("x") + ": formula " + std::to_string(formula) + ", oracle " + std::to_string(oracle);
    });
  }
}

// ---- fixtures for w* ----------------------------------------------------

template <class V>
struct Fixture {
  std::string name;
  V v;
  typename V::Element a, b;
};

template <class F>
void for_each_fixture(F&& f) {
  using QRF = RationalFunction<Rational>;
  const QtPlace vt(Polynomial<Rational>({Rational(0), Rational(1)}, Rational()));
  const QRF t = QRF::variable(Rational());
  f(Fixture<QtPlace>{"(-1,-1) over Q(t) at v_t", vt, QRF::constant(Rational(-1)), QRF::constant(Rational(-1))});
  f(Fixture<QtPlace>{"(t,1) over Q(t) at v_t", vt, t, QRF::constant(Rational(1))});
  f(Fixture<PAdicValuation>{"(2,3) over Q at v_5", PAdicValuation(5), Rational(2), Rational(3)});
}

template <class V>
ConicElement<typename V::Element> random_conic_element(Rng& rng, const V& v) {
  using EX = RationalFunction<typename V::Element>;
  const long kind = uniform(rng, 0, 5);
  EX f = kind == 0 ? EX(v.zero()) : random_function(rng, v);
  EX g = kind == 1 ? EX(v.zero()) : random_function(rng, v);
  return {f, g};
}

void suite_wstar_valuation(Recorder& rec, const SuiteOptions& o) {
  const long n = count_or(o, 500);
  for_each_fixture([&](const auto& fx) {
    using V = std::decay_t<decltype(fx.v)>;
    using E = typename V::Element;
    using EX = RationalFunction<E>;
    using Elem = ConicElement<E>;
    DistinguishedExtension<V> ext(fx.v, fx.a, fx.b);
    std::function<Elem(Rng&)> sample = [&](Rng& rng) { return random_conic_element(rng, fx.v); };
    std::function<Elem(const Elem&, const Elem&)> mul = [&](const Elem& p, const Elem& q) { return ext.mul(p, q); };
    std::function<Elem(const Elem&, const Elem&)> add = [&](const Elem& p, const Elem& q) { return ext.add(p, q); };
    std::function<Value(const Elem&)> value = [&](const Elem& p) { return ext.value(p); };
    std::function<std::string(const Elem&)> fmt = [&](const Elem& p) { return ext.format(p); };
    auto rep = valuation_axiom_fuzz<Elem>("w* " + fx.name, sample, mul, add, value, fmt, n, o.seed);
    rec.r.checks += rep.checks;
    if (!rep.agreement) rec.fail(fx.name + ": " + *rep.counterexample);
    rec.r.reports.push_back(rep);

    // restriction to E(x^2) against the Gauss extension with pivot (a/b) x^2
    auto w = GaussExtension<V>::on_square(fx.v, fx.a / fx.b);
    const EX x2 = EX(Polynomial<E>::monomial(fx.v.one(), 2));
    Rng rng(o.seed + 1);
    for (long i = 0; i < n; ++i) {
      const EX h = random_function(rng, fx.v).compose(x2);
      const Value lhs = ext.value(h), rhs = w.value(h);
      rec.check(lhs == rhs, [&] {
        return fx.name + ": w*(" + ext.format(h) + ") = " + lhs.to_string() + " but the Gauss extension gives " +
               rhs.to_string();
      });
    }
  });
}

void suite_value_group(Recorder& rec, const SuiteOptions& o) {
  const long n = count_or(o, 500);
  for_each_fixture([&](const auto& fx) {
    using V = std::decay_t<decltype(fx.v)>;
    DistinguishedExtension<V> ext(fx.v, fx.a, fx.b);
    const auto reps = ext.coset_representatives();
    const std::array<ConicElement<typename V::Element>, 4> witness{ext.one(), ext.xs(), ext.s(), ext.x()};
    const auto group = ext.value_group();
    for (std::size_t i = 0; i < 4; ++i) {
      const Value raw = ext.value(witness[i]);
      const long shift = (raw.twice() - reps[i].twice()) / 2;
      const auto attained = ext.mul(witness[i], ext.from_base(fx.v.uniformizer_power(-shift)));
      const Value got = ext.value(attained);
      rec.check(got == reps[i] && group.contains(got), [&] {
        return fx.name + ": representative " + reps[i].to_string() + " not attained (got " + got.to_string() + ")";
      });
    }
    Rng rng(o.seed);
    for (long i = 0; i < n; ++i) {
      auto p = random_conic_element(rng, fx.v);
      if (ext.is_zero(p)) continue;
      const Value val = ext.value(p);
      rec.check(group.contains(val), [&] {
        return fx.name + ": value " + val.to_string() + " outside " + group.to_string();
      });
    }
  });
}

void suite_positive_fixture(Recorder& rec, const SuiteOptions&) {
  using QRF = RationalFunction<Rational>;
  const QtPlace vt(Polynomial<Rational>({Rational(0), Rational(1)}, Rational()));
  auto rep = analyze(vt, QRF::constant(Rational(-1)), QRF::constant(Rational(-1)));
  rec.check(rep.present, [] { return "analyze does not report PRESENT"; });
  rec.check(rep.extension.value_group() == ValueGroup::integers(),
            [&] { return "value group " + rep.extension.value_group().to_string(); });
  const auto& d = rep.extension.residue_field();
  rec.check(d.conic && d.kappa == "Q" && d.a0bar == Rational(-1) && d.b0bar == Rational(-1), [&] {
    return "residue field is not Q(T)(sqrt(-T^2 - 1)): " + rep.extension.relation_text();
  });
  rec.check(rep.extension.relation_text() == "S^2 = -T^2 - 1",
            [&] { return "relation " + rep.extension.relation_text(); });
  const auto pt = isotropy_search(Rational(-1), Rational(-1), kDefaultSearchBound);
  rec.check(!pt.has_value(), [] { return "isotropy search found a point on -X^2 - Y^2 = Z^2"; });
}

void suite_negative_case_sweep(Recorder& rec, const SuiteOptions&) {
  for (std::uint64_t q : {3, 5}) {
    auto ctx = GFContext::prime(q);
    const GF zero(ctx, 0);
    using RF = RationalFunction<GF>;
    const FqtPlace vt(Polynomial<GF>({zero, GF(ctx, 1)}, zero));
    std::vector<RF> entries;
    for (std::uint64_t c = 1; c < q; ++c) {
      for (std::size_t e = 0; e <= 2; ++e) entries.emplace_back(Polynomial<GF>::monomial(GF(ctx, static_cast<std::int64_t>(c)), e));
    }
    const RF x = RF::variable(zero);
    for (const auto& a : entries) {
      for (const auto& b : entries) {
        const std::string label = "GF(" + std::to_string(q) + "), (" + a.to_string("t") + ", " + b.to_string("t") + ")";
        auto rep = analyze(vt, a, b, 5);
        rec.check(!rep.present, [&] { return label + ": reported PRESENT"; });
        rec.check(rep.family.size() == 5, [&] { return label + ": family has " + std::to_string(rep.family.size()) + " members"; });
        std::set<long> vcs;
        const bool ramified = vt.order(a) % 2 != 0 || vt.order(b) % 2 != 0;
        const QuadraticKind expected = ramified ? QuadraticKind::Ramified : QuadraticKind::SplitPair;
        const auto conic = RationalFunction<RF>(Polynomial<RF>({b, RF(zero), a}, RF(zero)));
        for (const auto& m : rep.family) {
          vcs.insert(m.vc);
          rec.check(subfield_degree(m.pivot).degree == 1, [&] { return label + ": pivot does not generate E(x)"; });
          auto w = GaussExtension<FqtPlace>::with_pivot(vt, m.pivot);
          const auto kind = quadratic_extension_analysis(w, conic).kind;
          rec.check(kind == expected && kind == m.branch, [&] {
            return label + ": quadratic step " + std::string(to_string(kind)) + ", expected " + to_string(expected);
          });
        }
        rec.check(vcs.size() == rep.family.size(), [&] { return label + ": repeated pivot valuations"; });
      }
    }
  }
}

void suite_rep_independence(Recorder& rec, const SuiteOptions& o) {
  using QRF = RationalFunction<Rational>;
  const QtPlace vt(Polynomial<Rational>({Rational(0), Rational(1)}, Rational()));
  const QRF t = QRF::variable(Rational());
  Rng rng(o.seed);
  const long n = count_or(o, 100);
  const std::array<long, 8> consts{-1, 1, 2, -2, 3, -3, 5, -5};
  auto entry = [&] {
    QRF e = QRF::constant(Rational(consts[static_cast<std::size_t>(uniform(rng, 0, 7))]));
    e = e * t.pow(uniform(rng, 0, 3));
    if (uniform(rng, 0, 2) == 0) e = e * (t + QRF::constant(Rational(uniform(rng, 1, 3))));
    return e;
  };
  auto nonzero = [&] {
    for (;;) {
      QRF r = random_scalar(rng, vt);
      if (!r.is_zero()) return r;
    }
  };
  for (long i = 0; i < n; ++i) {
    const QRF a = entry(), b = entry();
    const auto base = decide_unramified_extension(vt, a, b).kind;
    QRF a2 = a, b2 = b;
    std::string moves;
    const long steps = uniform(rng, 1, 4);
    for (long s = 0; s < steps; ++s) {
      Move<QRF> m{static_cast<MoveKind>(uniform(rng, 0, 3)), std::nullopt};
      if (m.kind == MoveKind::ScaleA || m.kind == MoveKind::ScaleB) m.factor = nonzero();
      std::tie(a2, b2) = apply_move(m, a2, b2);
      moves += std::string(moves.empty() ? "" : ",") + to_string(m.kind);
    }
    const auto moved = decide_unramified_extension(vt, a2, b2).kind;
    rec.check(base == moved, [&] {
      return "(" + a.to_string("t") + ", " + b.to_string("t") + ") gives " + to_string(base) + " but after " + moves +
             " gives " + to_string(moved);
    });
  }
}

void suite_residue_relation(Recorder& rec, const SuiteOptions& o) {
  using QRF = RationalFunction<Rational>;
  const QtPlace vt(Polynomial<Rational>({Rational(0), Rational(1)}, Rational()));
  DistinguishedExtension<QtPlace> ext(vt, QRF::constant(Rational(-1)), QRF::constant(Rational(-1)));
  const QRF zero(Rational{});
  const QRF T = QRF::variable(Rational());
  const auto rx = ext.residue(ext.x());
  const auto rs = ext.residue(ext.s());
  rec.check(rx.A == T && rx.B.is_zero(), [&] { return "residue of x is " + ext.format_residue(rx); });
  rec.check(rs.A.is_zero() && rs.B.is_one(), [&] { return "residue of s is " + ext.format_residue(rs); });
  const auto s2 = ext.residue_mul(rs, rs), x2 = ext.residue_mul(rx, rx);
  rec.check(s2.B.is_zero() && x2.B.is_zero() && s2.A == -x2.A - QRF::constant(Rational(1)),
            [&] { return "S^2 = " + ext.format_residue(s2) + " differs from -T^2 - 1"; });
  const auto direct = ext.residue(ext.mul(ext.s(), ext.s()));
  rec.check(direct == s2, [&] { return "residue of s^2 is " + ext.format_residue(direct); });

  Rng rng(o.seed);
  auto unit = [&] {
    for (;;) {
      auto p = random_conic_element(rng, vt);
      if (ext.is_zero(p)) continue;
      const Value val = ext.value(p);
      return ext.mul(p, ext.from_base(vt.uniformizer_power(-val.as_integer())));
    }
  };
  const long n = count_or(o, 200);
  for (long i = 0; i < n; ++i) {
    const auto p = unit(), q = unit();
    const auto lhs = ext.residue(ext.mul(p, q));
    const auto rhs = ext.residue_mul(ext.residue(p), ext.residue(q));
    rec.check(lhs == rhs, [&] {
      return "residue not multiplicative on " + ext.format(p) + " and " + ext.format(q);
    });
  }
}

struct SuiteDef {
  std::string name;
  std::string description;
  std::optional<double> limit;
  void (*run)(Recorder&, const SuiteOptions&);
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs{
      {"gauss-formula", "Gauss value equals the direct coefficient minimum, 10^4 polynomials per valuation", 10.0,
       suite_gauss_formula},
      {"hilbert-product", "product of Hilbert symbols over all places is +1", std::nullopt, suite_hilbert_product},
      {"finite-split", "every (a,b) over F_q splits with a verified point", 60.0, suite_finite_split},
      {"quadratic-hensel", "split_pair/inert agrees with Hensel root counts", std::nullopt, suite_quadratic_hensel},
      {"degree-formula", "subfield degree agrees with the linear-algebra oracle over F_7", std::nullopt,
       suite_degree_formula},
      {"wstar-valuation", "w* is a valuation and restricts to the Gauss extension on E(x^2)", std::nullopt,
       suite_wstar_valuation},
      {"value-group", "coset representatives are attained and sampled values lie in the group", std::nullopt,
       suite_value_group},
      {"positive-fixture", "(-1,-1) over Q(t) at v_t has the distinguished extension", std::nullopt,
       suite_positive_fixture},
      {"negative-case-sweep", "no distinguished extension and a rational family for c*t^e entries over F_3(t), F_5(t)",
       120.0, suite_negative_case_sweep},
      {"rep-independence", "verdicts agree across square scalings, swaps and b -> -ab", std::nullopt,
       suite_rep_independence},
      {"residue-relation", "S^2 = -T^2 - 1 and residues are multiplicative", std::nullopt, suite_residue_relation},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.name);
    return out;
  }();
  return names;
}

std::string suite_description(const std::string& name) {
  for (const auto& d : registry()) {
    if (d.name == name) return d.description;
  }
  throw UsageError("unknown suite '" + name + "'");
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& d : registry()) {
    if (d.name != name) continue;
    SuiteResult r;
    r.name = d.name;
    r.description = d.description;
    r.time_limit = d.limit;
    Recorder rec{r};
    const auto start = std::chrono::steady_clock::now();
    try {
      d.run(rec, options);
    } catch (const std::exception& e) {
      rec.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.time_limit && options.samples <= 0 && r.seconds > *r.time_limit) {
      r.passed = false;
      r.failures.push_back("took " + std::to_string(r.seconds) + " s, limit " + std::to_string(*r.time_limit) + " s");
    }
    return r;
  }
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace conicval
