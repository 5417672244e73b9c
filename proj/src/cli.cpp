#include "conicval/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "conicval/conic.hpp"
#include "conicval/descriptors.hpp"
#include "conicval/hilbert.hpp"
#include "conicval/integer.hpp"
#include "conicval/oracle.hpp"
#include "conicval/suites.hpp"

namespace conicval {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string field, val, a, b, f, g = "0", pivot, element, y, place, suite = "all";
  std::string a1, b1, a2, b2;
  int count = -1;
  long bound = kDefaultSearchBound;
  std::uint64_t seed = kDefaultSeed;
  long samples = 0;
};

// ---- formatting ---------------------------------------------------------

template <class V>
std::string fmt_x(const V& v, const RationalFunction<typename V::Element>& h) {
  return detail::format_over(v, h, "x");
}

std::string fmt_field(const Rational& x) { return x.to_string(); }
std::string fmt_field(const GF& x) { return x.to_string(); }
std::string fmt_field(const RationalFunction<GF>& x) { return x.to_string("t"); }

template <class V>
json transcript_json(const V& v, const NormalizedPresentation<typename V::Element>& n) {
  json moves = json::array();
  for (const auto& m : n.transcript) {
    json j{{"move", to_string(m.kind)}};
    j["factor"] = m.factor ? json(v.format(*m.factor)) : json(nullptr);
    moves.push_back(j);
  }
  return moves;
}

template <class V>
json normalized_json(const V& v, const NormalizedPresentation<typename V::Element>& n) {
  return {{"a", v.format(n.a)}, {"b", v.format(n.b)}, {"shape", to_string(n.shape)}};
}

template <class V>
json value_group_json(const DistinguishedExtension<V>& ext) {
  json reps = json::array(), wit = json::array();
  const auto r = ext.coset_representatives();
  for (std::size_t i = 0; i < 4; ++i) {
    reps.push_back(r[i].to_string());
    wit.push_back(DistinguishedExtension<V>::kCosetWitness[i]);
  }
  return {{"group", ext.value_group().to_string()}, {"coset_representatives", reps}, {"witnesses", wit}};
}

template <class V>
json residue_field_json(const V& v, const DistinguishedExtension<V>& ext) {
  const auto& d = ext.residue_field();
  json j{{"variant", d.conic ? "conic" : "rational"},
         {"kappa", d.kappa},
         {"generators", d.generators()},
         {"relation", ext.relation_text()},
         {"case", to_string(ext.case_tag())},
         {"generator_element", d.generator.empty() ? json(nullptr) : json(d.generator)}};
  if (d.conic) {
    j["a0"] = v.format(*d.a0);
    j["b0"] = v.format(*d.b0);
    j["u"] = v.format(*d.u);
    j["nu"] = v.format(*d.nu);
    j["a0bar"] = v.format_residue(*d.a0bar);
    j["b0bar"] = v.format_residue(*d.b0bar);
  } else {
    j["unit"] = d.unit ? json(v.format(*d.unit)) : json(nullptr);
  }
  return j;
}

template <class V>
json family_json(const V& v, const std::vector<FamilyMember<V>>& fam) {
  json out = json::array();
  for (const auto& m : fam) {
    json j{{"pivot", fmt_x(v, m.pivot)},
           {"c", v.format(m.c)},
           {"v_c", m.vc},
           {"constraint", m.constraint},
           {"branch", to_string(m.branch)},
           {"at_infinity", m.at_infinity}};
    j["conic_point"] = m.conic_point ? json{{"y", v.format(m.conic_point->first)}, {"z0", v.format(m.conic_point->second)}}
                                     : json(nullptr);
    out.push_back(j);
  }
  return out;
}

template <class K>
json point_json(const std::optional<std::array<K, 3>>& p) {
  if (!p) return nullptr;
  return json::array({fmt_field((*p)[0]), fmt_field((*p)[1]), fmt_field((*p)[2])});
}

template <class K>
json split_json(const SplitResult<K>& r) {
  json sym = json::array();
  for (const auto& s : r.symbols) sym.push_back({{"place", s.place}, {"symbol", s.symbol}});
  return {{"split", r.split}, {"point", point_json(r.point)}, {"symbols", sym}};
}

template <class V>
json residue_algebra_json(const V& v, const ExtensionVerdict<V>& ver) {
  if (!ver.residue_algebra) return nullptr;
  json j{{"a", v.format_residue(ver.residue_algebra->first)}, {"b", v.format_residue(ver.residue_algebra->second)}};
  j["split"] = ver.residue_split ? json(ver.residue_split->split) : json(nullptr);
  return j;
}

// ---- witness of decide --------------------------------------------------

template <class V>
json decide_witness(const V& v, const ExtensionVerdict<V>& ver) {
  auto w = [](std::string type, std::string detail) { return json{{"type", std::move(type)}, {"detail", std::move(detail)}}; };
  if (ver.global_split) return w("global_split", *ver.global_split);
  if (ver.residue_algebra) {
    const std::string pair =
        "(" + v.format_residue(ver.residue_algebra->first) + ", " + v.format_residue(ver.residue_algebra->second) + ")";
    if (!ver.residue_split->split) return w("residue_division_algebra", pair + " is a division algebra over " + v.residue_field_name());
    if (ver.residue_split->point) {
      const auto& p = *ver.residue_split->point;
      return w("residue_point", pair + " has the point (" + v.format_residue(p[0]) + ", " + v.format_residue(p[1]) +
                                    ", " + v.format_residue(p[2]) + ")");
    }
    return w("residue_split", pair + " is split over " + v.residue_field_name());
  }
  const std::string bbar = v.format_residue(v.residue(ver.normalized.b));
  if (ver.residue_root) return w("residue_square_root", "sqrt(" + bbar + ") = " + v.format_residue(*ver.residue_root));
  return w("ramified", bbar + " is not a square in " + v.residue_field_name());
}

// ---- commands -----------------------------------------------------------

template <class F>
int with_valuation(const Options& o, F&& body) {
  AnyValuation v = parse_valuation(o.val);
  if (!o.field.empty()) require_same_field(parse_field(o.field), v);
  return std::visit(body, v);
}

int cmd_analyze(const Options& o, std::ostream& out) {
  return with_valuation(o, [&](const auto& v) {
    const auto a = parse_base(v, o.a), b = parse_base(v, o.b);
    auto rep = analyze(v, a, b, o.count < 0 ? 3 : o.count, o.bound);
    json j{{"command", "analyze"},
           {"field", base_field(AnyValuation(v)).describe()},
           {"valuation", v.describe()},
           {"a", v.format(a)},
           {"b", v.format(b)},
           {"verdict", rep.present ? "PRESENT" : "ABSENT"},
           {"extension_verdict", to_string(rep.verdict.kind)},
           {"normalization_transcript", transcript_json(v, rep.verdict.normalized)},
           {"normalized", normalized_json(v, rep.verdict.normalized)},
           {"value_group", value_group_json(rep.extension)},
           {"residue_field", residue_field_json(v, rep.extension)},
           {"family", family_json(v, rep.family)},
           {"global_split", rep.verdict.global_split ? json(*rep.verdict.global_split) : json(nullptr)},
           {"residue_algebra", residue_algebra_json(v, rep.verdict)},
           {"warnings", rep.warnings}};
    if (o.json) {
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    out << "verdict: " << j["verdict"].get<std::string>() << " (" << to_string(rep.verdict.kind) << ")\n";
    out << "normalized: (" << j["normalized"]["a"].get<std::string>() << ", " << j["normalized"]["b"].get<std::string>()
        << "), " << j["normalized"]["shape"].get<std::string>() << "\n";
    out << "value group: " << rep.extension.value_group().to_string() << "\n";
    out << "residue field: " << (rep.extension.residue_field().conic ? "conic" : "rational") << " over "
        << rep.extension.residue_field().kappa << ", " << rep.extension.relation_text() << "\n";
    for (const auto& m : j["family"]) {
      out << "family: " << m["pivot"].get<std::string>() << "  v(c) = " << m["v_c"].get<long>() << ", "
          << m["branch"].get<std::string>() << "\n";
    }
    for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
    return kExitOk;
  });
}

int cmd_eval(const Options& o, std::ostream& out) {
  return with_valuation(o, [&](const auto& v) {
    const auto a = parse_base(v, o.a), b = parse_base(v, o.b);
    using V = std::decay_t<decltype(v)>;
    DistinguishedExtension<V> ext(v, a, b);
    ConicElement<typename V::Element> el{parse_function(v, o.f), parse_function(v, o.g)};
    const Value val = eval_w_star(ext, el);
    json j{{"command", "eval"}, {"element", ext.format(el)}, {"value", val.to_string()}, {"case", to_string(ext.case_tag())}};
    j["residue"] = val == Value::integer(0) ? json(ext.format_residue(ext.residue(el))) : json(nullptr);
    if (o.json) {
      out << j.dump(2) << "\n";
    } else {
      out << "w*(" << j["element"].get<std::string>() << ") = " << val.to_string() << "\n";
      if (!j["residue"].is_null()) out << "residue: " << j["residue"].get<std::string>() << "\n";
    }
    return kExitOk;
  });
}

int cmd_gauss(const Options& o, std::ostream& out) {
  return with_valuation(o, [&](const auto& v) {
    using V = std::decay_t<decltype(v)>;
    const auto w = GaussExtension<V>::with_pivot(v, parse_function(v, o.pivot));
    const auto h = parse_function(v, o.element);
    const Value val = w.value(h);
    json j{{"command", "gauss"}, {"valuation", v.describe()}, {"pivot", w.format(w.pivot())}, {"element", w.format(h)},
           {"value", val.to_string()}};
    j["residue"] = val == Value::integer(0) ? json(w.format_residue(w.residue(h))) : json(nullptr);
    if (o.json) {
      out << j.dump(2) << "\n";
    } else {
      out << "value: " << val.to_string() << "\n";
      if (!j["residue"].is_null()) out << "residue: " << j["residue"].get<std::string>() << "\n";
    }
    return kExitOk;
  });
}

QPlace parse_place(const std::string& s) {
  if (s == "inf") return QPlace::real();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("place must be a prime or inf, got '" + s + "'");
  }
  const mpz_class p(s);
  if (!is_prime(p)) throw UsageError(s + " is not prime");
  return QPlace::at(p);
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  const Rational a = parse_rational(o.a), b = parse_rational(o.b);
  const QPlace pl = parse_place(o.place);
  const int s = hilbert_symbol(a, b, pl);
  if (o.json) {
    out << json{{"command", "hilbert"}, {"a", a.to_string()}, {"b", b.to_string()}, {"place", pl.to_string()}, {"symbol", s}}.dump(2)
        << "\n";
  } else {
    out << s << "\n";
  }
  return kExitOk;
}

void print_split(std::ostream& out, const json& j) {
  out << (j["split"].get<bool>() ? "split" : "division") << "\n";
  if (!j["point"].is_null()) {
    out << "point: (" << j["point"][0].get<std::string>() << ", " << j["point"][1].get<std::string>() << ", "
        << j["point"][2].get<std::string>() << ")\n";
  }
  for (const auto& s : j["symbols"]) out << "symbol at " << s["place"].get<std::string>() << ": " << s["symbol"].get<int>() << "\n";
}

int cmd_quat_split(const Options& o, std::ostream& out) {
  const FieldDesc fd = parse_field(o.field);
  json j{{"command", "quat split"}, {"field", fd.describe()}};
  switch (fd.kind) {
    case FieldDesc::Kind::Q:
      j.update(split_json(is_split(parse_rational(o.a), parse_rational(o.b), o.bound)));
      break;
    case FieldDesc::Kind::Finite:
      j.update(split_json(is_split(parse_finite(fd.ctx, o.a), parse_finite(fd.ctx, o.b))));
      break;
    case FieldDesc::Kind::Fqt:
      j.update(split_json(is_split(parse_fqt(fd.ctx, o.a), parse_fqt(fd.ctx, o.b))));
      break;
    case FieldDesc::Kind::Qt:
      is_split(parse_qt(o.a), parse_qt(o.b));
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    print_split(out, j);
  }
  return kExitOk;
}

int cmd_quat_decide(const Options& o, std::ostream& out) {
  return with_valuation(o, [&](const auto& v) {
    const auto a = parse_base(v, o.a), b = parse_base(v, o.b);
    auto ver = decide_unramified_extension(v, a, b, o.bound);
    json j{{"command", "quat decide"},
           {"kind", to_string(ver.kind)},
           {"witness", decide_witness(v, ver)},
           {"transcript", transcript_json(v, ver.normalized)},
           {"normalized", normalized_json(v, ver.normalized)},
           {"diagnostics", ver.diagnostics}};
    if (o.json) {
      out << j.dump(2) << "\n";
    } else {
      out << "kind: " << j["kind"].get<std::string>() << "\n";
      out << "witness: " << j["witness"]["detail"].get<std::string>() << "\n";
      for (const auto& m : j["transcript"]) {
        out << "move: " << m["move"].get<std::string>();
        if (!m["factor"].is_null()) out << " by " << m["factor"].get<std::string>();
        out << "\n";
      }
      for (const auto& d : ver.diagnostics) out << "warning: " << d << "\n";
    }
    return kExitOk;
  });
}

int cmd_quat_iso(const Options& o, std::ostream& out) {
  const Rational a1 = parse_rational(o.a1), b1 = parse_rational(o.b1), a2 = parse_rational(o.a2),
                 b2 = parse_rational(o.b2);
  auto names = [](const std::vector<QPlace>& ps) {
    std::vector<std::string> s;
    for (const auto& p : ps) s.push_back(p.to_string());
    return s;
  };
  json j{{"command", "quat iso"},
         {"isomorphic", quaternion_isomorphic(a1, b1, a2, b2)},
         {"ramified_first", names(ramified_places(a1, b1))},
         {"ramified_second", names(ramified_places(a2, b2))}};
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << (j["isomorphic"].get<bool>() ? "isomorphic" : "not isomorphic") << "\n";
  }
  return kExitOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  return with_valuation(o, [&](const auto& v) {
    const auto a = parse_base(v, o.a), b = parse_base(v, o.b);
    auto fam = rational_residue_family(v, a, b, o.count < 0 ? 5 : o.count, o.bound);
    json j{{"command", "family"}, {"members", family_json(v, fam)}};
    if (o.json) {
      out << j.dump(2) << "\n";
    } else {
      for (const auto& m : j["members"]) {
        out << m["pivot"].get<std::string>() << "  v(c) = " << m["v_c"].get<long>() << "  ("
            << m["constraint"].get<std::string>() << ", " << m["branch"].get<std::string>() << ")\n";
      }
    }
    return kExitOk;
  });
}

template <class K>
json polyrep_json(const RationalFunction<K>& y, std::string text) {
  const auto d = subfield_degree(y);
  return {{"command", "polyrep"}, {"y", std::move(text)}, {"degree", d.degree}, {"integral", d.integral}};
}

int cmd_polyrep(const Options& o, std::ostream& out) {
  const FieldDesc fd = parse_field(o.field);
  json j;
  switch (fd.kind) {
    case FieldDesc::Kind::Q: {
      auto y = parse_q_x(o.y);
      j = polyrep_json(y, y.to_string("x"));
      j["oracle_degree"] = nullptr;
      break;
    }
    case FieldDesc::Kind::Finite: {
      auto y = parse_finite_x(fd.ctx, o.y);
      j = polyrep_json(y, y.to_string("x"));
      const bool small = fd.ctx->is_prime_field() && fd.ctx->characteristic() <= 13;
      j["oracle_degree"] = small ? json(degree_oracle(y)) : json(nullptr);
      break;
    }
    case FieldDesc::Kind::Qt: {
      auto y = parse_qt_x(o.y);
      j = polyrep_json(y, y.to_string("x", "t"));
      j["oracle_degree"] = nullptr;
      break;
    }
    case FieldDesc::Kind::Fqt: {
      auto y = parse_fqt_x(fd.ctx, o.y);
      j = polyrep_json(y, y.to_string("x", "t"));
      j["oracle_degree"] = nullptr;
      break;
    }
  }
  if (!j["oracle_degree"].is_null() && j["oracle_degree"] != j["degree"]) {
    out << j.dump(2) << "\n";
    return kExitDisagreement;
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "degree: " << j["degree"].get<int>() << "\nintegral: " << (j["integral"].get<bool>() ? "true" : "false") << "\n";
    if (!j["oracle_degree"].is_null()) out << "oracle degree: " << j["oracle_degree"].get<int>() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    suite_description(o.suite);
    names.push_back(o.suite);
  }
  SuiteOptions so{o.seed, o.samples};
  json suites = json::array();
  bool all = true;
  for (const auto& n : names) {
    const SuiteResult r = run_suite(n, so);
    all = all && r.passed;
    json reports = json::array();
    for (const auto& rep : r.reports) {
      reports.push_back({{"name", rep.name},
                         {"inputs_digest", rep.inputs_digest},
                         {"agreement", rep.agreement},
                         {"checks", rep.checks},
                         {"counterexample", rep.counterexample ? json(*rep.counterexample) : json(nullptr)}});
    }
    suites.push_back({{"name", r.name},
                      {"description", r.description},
                      {"agreement", r.passed},
                      {"checks", r.checks},
                      {"skipped", r.skipped},
                      {"seconds", r.seconds},
                      {"time_limit", r.time_limit ? json(*r.time_limit) : json(nullptr)},
                      {"failures", r.failures},
                      {"oracle_reports", reports}});
  }
  json j{{"command", "verify"},
         {"seed", o.seed},
         {"samples", o.samples},
         {"inputs_digest", digest(o.suite + ":" + std::to_string(o.seed) + ":" + std::to_string(o.samples))},
         {"agreement", all},
         {"suites", suites}};
  out << j.dump(2) << "\n";
  return all ? kExitOk : kExitDisagreement;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Valuations on function fields of conics and quaternion algebras", "conicval"};
  app.require_subcommand(1);
  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "Machine-readable JSON output"); };
  auto bound_opt = [&](CLI::App* c) {
    c->add_option("--search-bound", o.bound, "Height bound for rational point searches")->capture_default_str();
  };
  auto pair_opts = [&](CLI::App* c) {
    c->add_option("--a", o.a, "First entry a")->required();
    c->add_option("--b", o.b, "Second entry b")->required();
  };
  const char* field_help = "Base field: Q, Q(t), Fq(t):q=N[,mod=m(u)], GF(p), GF(q), GF(p)[u]/(m(u))";
  const char* val_help = "Valuation: Q:p=5, Q(t):place=t-2, Fq(t):q=3,place=t^2+1, Fq(t):q=5,place=inf";

  auto* analyze_cmd = app.add_subcommand("analyze", "Decide whether the distinguished extension to F = E(x)(s) exists");
  analyze_cmd->add_option("--field", o.field, field_help)->required();
  analyze_cmd->add_option("--val", o.val, val_help)->required();
  pair_opts(analyze_cmd);
  analyze_cmd->add_option("--count", o.count, "Family members reported in the negative case (default 3)");
  bound_opt(analyze_cmd);
  json_flag(analyze_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Value (and residue) of f + g*s under w*");
  eval_cmd->add_option("--field", o.field, field_help);
  eval_cmd->add_option("--val", o.val, val_help)->required();
  pair_opts(eval_cmd);
  eval_cmd->add_option("--f", o.f, "Rational function f in x")->required();
  eval_cmd->add_option("--g", o.g, "Rational function g in x")->capture_default_str();
  json_flag(eval_cmd);

  auto* gauss_cmd = app.add_subcommand("gauss", "Gauss extension of v to E(x) with respect to a pivot");
  gauss_cmd->add_option("--val", o.val, val_help)->required();
  gauss_cmd->add_option("--pivot", o.pivot, "Pivot of degree one in x, e.g. t*(x-1)")->required();
  gauss_cmd->add_option("--eval", o.element, "Element of E(x) to evaluate")->required();
  json_flag(gauss_cmd);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol (a,b) at a place of Q");
  hilbert_cmd->add_option("--a", o.a, "Nonzero rational a")->required();
  hilbert_cmd->add_option("--b", o.b, "Nonzero rational b")->required();
  hilbert_cmd->add_option("--place", o.place, "A prime or inf")->required();
  json_flag(hilbert_cmd);

  auto* quat_cmd = app.add_subcommand("quat", "Quaternion algebras (a,b)");
  quat_cmd->require_subcommand(1);
  auto* split_cmd = quat_cmd->add_subcommand("split", "Whether (a,b) splits over a field");
  split_cmd->add_option("--field", o.field, field_help)->required();
  pair_opts(split_cmd);
  bound_opt(split_cmd);
  json_flag(split_cmd);
  auto* decide_cmd = quat_cmd->add_subcommand("decide", "Whether v has an unramified extension to (a,b)");
  decide_cmd->add_option("--field", o.field, field_help)->required();
  decide_cmd->add_option("--val", o.val, val_help)->required();
  pair_opts(decide_cmd);
  bound_opt(decide_cmd);
  json_flag(decide_cmd);
  auto* iso_cmd = quat_cmd->add_subcommand("iso", "Whether (a1,b1) and (a2,b2) are isomorphic over Q");
  iso_cmd->add_option("--a1", o.a1, "a1")->required();
  iso_cmd->add_option("--b1", o.b1, "b1")->required();
  iso_cmd->add_option("--a2", o.a2, "a2")->required();
  iso_cmd->add_option("--b2", o.b2, "b2")->required();
  json_flag(iso_cmd);

  auto* family_cmd = app.add_subcommand("family", "Gauss extensions with rational residue fields (negative case)");
  family_cmd->add_option("--field", o.field, field_help);
  family_cmd->add_option("--val", o.val, val_help)->required();
  pair_opts(family_cmd);
  family_cmd->add_option("--count", o.count, "Number of members (default 5)");
  bound_opt(family_cmd);
  json_flag(family_cmd);

  auto* polyrep_cmd = app.add_subcommand("polyrep", "[E(x):E(Y)] and integrality of x over E[Y]");
  polyrep_cmd->add_option("--field", o.field, field_help);
  polyrep_cmd->add_option("--y", o.y, "Nonconstant Y in E(x)")->required();
  json_flag(polyrep_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run oracle cross-check suites (JSON report)");
  verify_cmd->add_option("--suite", o.suite, "Suite name or all")->capture_default_str();
  verify_cmd->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  verify_cmd->add_option("--samples", o.samples, "Sample count override for randomized suites (0 keeps defaults)")
      ->capture_default_str();
  json_flag(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (gauss_cmd->parsed()) return cmd_gauss(o, out);
    if (hilbert_cmd->parsed()) return cmd_hilbert(o, out);
    if (split_cmd->parsed()) return cmd_quat_split(o, out);
    if (decide_cmd->parsed()) return cmd_quat_decide(o, out);
    if (iso_cmd->parsed()) return cmd_quat_iso(o, out);
    if (family_cmd->parsed()) return cmd_family(o, out);
    if (polyrep_cmd->parsed()) {
      if (o.field.empty()) o.field = "Q";
      return cmd_polyrep(o, out);
    }
    if (verify_cmd->parsed()) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMath;
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

}  // namespace conicval
