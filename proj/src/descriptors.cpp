#include "conicval/descriptors.hpp"

#include <map>

#include "conicval/integer.hpp"

namespace conicval {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// "k=v,k=v" into a map; UsageError on malformed or repeated keys.
std::map<std::string, std::string> parse_options(std::string_view text, const std::vector<std::string>& allowed) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string item = trim(text.substr(start, end - start));
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value in descriptor, got '" + item + "'");
    std::string key = trim(item.substr(0, eq));
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw UsageError("unknown descriptor key '" + key + "'");
    }
    if (!out.emplace(key, trim(item.substr(eq + 1))).second) throw UsageError("repeated descriptor key '" + key + "'");
    start = end + 1;
  }
  return out;
}

mpz_class parse_positive(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(what + " must be a positive integer, got '" + s + "'");
  }
  return mpz_class(s);
}

std::uint64_t odd_prime_of(const mpz_class& q) {
  const auto f = factor_integer(q);
  if (f.size() != 1) throw UsageError("q = " + q.get_str() + " is not a prime power");
  if (f[0].first == 2) throw UsageError("characteristic 2 is not supported");
  if (!f[0].first.fits_ulong_p()) throw UsageError("characteristic too large");
  return f[0].first.get_ui();
}

// Modulus polynomial in u over F_p, lowest degree first.
std::vector<std::uint64_t> parse_modulus(std::uint64_t p, std::string_view text) {
  using RF = RationalFunction<GF>;
  auto ctx = GFContext::prime(p);
  const RF m = evaluate<RF>(
      *parse_expression(text, {"u"}), [&](const mpz_class& n) { return RF::constant(GF::from_integer(ctx, n)); },
      [&](const std::string&) { return RF::variable(GF(ctx, 0)); });
  if (!m.den().is_constant()) throw UsageError("modulus must be a polynomial in u");
  std::vector<std::uint64_t> out;
  for (const auto& c : m.num().coefficients()) out.push_back(c.coefficients()[0]);
  return out;
}

GFContextPtr finite_context(const mpz_class& q, const std::string* modulus) {
  const std::uint64_t p = odd_prime_of(q);
  if (modulus == nullptr) return GFContext::of_order(q);
  auto ctx = GFContext::extension(p, parse_modulus(p, *modulus));
  if (ctx->order() != q) throw UsageError("modulus degree does not match q = " + q.get_str());
  return ctx;
}

template <class T>
T fold(const ExprPtr& e, const std::function<T(const mpz_class&)>& num,
       const std::function<T(const std::string&)>& var) {
  return evaluate<T>(*e, num, var);
}

std::vector<std::string> with_u(const GFContextPtr& ctx, std::vector<std::string> vars) {
  if (!ctx->is_prime_field()) vars.push_back("u");
  return vars;
}

}  // namespace

std::string FieldDesc::describe() const {
  switch (kind) {
    case Kind::Q:
      return "Q";
    case Kind::Qt:
      return "Q(t)";
    case Kind::Fqt:
      return ctx->describe() + "(t)";
    case Kind::Finite:
      return ctx->describe();
  }
  return "?";
}

std::vector<std::string> FieldDesc::variables() const {
  switch (kind) {
    case Kind::Q:
      return {};
    case Kind::Qt:
      return {"t"};
    case Kind::Fqt:
      return with_u(ctx, {"t"});
    case Kind::Finite:
      return with_u(ctx, {});
  }
  return {};
}

FieldDesc parse_field(std::string_view raw) {
  const std::string text = trim(raw);
  if (text == "Q") return {FieldDesc::Kind::Q, nullptr};
  if (text == "Q(t)") return {FieldDesc::Kind::Qt, nullptr};
  if (text.rfind("Fq(t):", 0) == 0) {
    auto opts = parse_options(std::string_view(text).substr(6), {"q", "mod"});
    if (!opts.count("q")) throw UsageError("Fq(t) needs q=...");
    auto it = opts.find("mod");
    return {FieldDesc::Kind::Fqt, finite_context(parse_positive(opts["q"], "q"), it == opts.end() ? nullptr : &it->second)};
  }
  if (text.rfind("GF(", 0) == 0) {
    const auto close = text.find(')');
    if (close == std::string::npos) throw UsageError("unbalanced GF(...) descriptor");
    const mpz_class q = parse_positive(trim(text.substr(3, close - 3)), "field order");
    std::string rest = trim(text.substr(close + 1));
    if (rest.empty()) return {FieldDesc::Kind::Finite, finite_context(q, nullptr)};
    if (rest.rfind("[u]/(", 0) != 0 || rest.back() != ')') throw UsageError("expected GF(p)[u]/(m(u))");
    if (!is_prime(q)) throw UsageError("GF(p)[u]/(m(u)) needs p prime");
    const std::string mod = rest.substr(5, rest.size() - 6);
    return {FieldDesc::Kind::Finite, GFContext::extension(odd_prime_of(q), parse_modulus(odd_prime_of(q), mod))};
  }
  throw UsageError("unknown field descriptor '" + text + "'");
}

AnyValuation parse_valuation(std::string_view raw) {
  const std::string text = trim(raw);
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("valuation descriptor needs ':' (e.g. Q:p=5)");
  const std::string head = text.substr(0, colon);
  const std::string_view tail = std::string_view(text).substr(colon + 1);
  if (head == "Q") {
    auto opts = parse_options(tail, {"p"});
    const mpz_class p = parse_positive(opts["p"], "p");
    if (p == 2) {
      throw UsageError("dyadic valuation rejected: the residue field must have characteristic different from 2 "
                       "(v(2) = 0 is required)");
    }
    if (!is_prime(p) || !p.fits_ulong_p()) throw UsageError("p = " + p.get_str() + " is not an odd prime");
    return PAdicValuation(p.get_ui());
  }
  if (head == "Q(t)") {
    auto opts = parse_options(tail, {"place"});
    if (!opts.count("place")) throw UsageError("Q(t) valuation needs place=...");
    if (opts["place"] == "inf") return QtPlace(Rational());
    auto pi = parse_qt(opts["place"]);
    if (!pi.den().is_constant()) throw UsageError("place must be a polynomial in t");
    return QtPlace(pi.num().monic());
  }
  if (head == "Fq(t)") {
    auto opts = parse_options(tail, {"q", "mod", "place"});
    if (!opts.count("q") || !opts.count("place")) throw UsageError("Fq(t) valuation needs q=... and place=...");
    auto it = opts.find("mod");
    auto ctx = finite_context(parse_positive(opts["q"], "q"), it == opts.end() ? nullptr : &it->second);
    if (opts["place"] == "inf") return FqtPlace(GF(ctx, 0));
    auto pi = parse_fqt(ctx, opts["place"]);
    if (!pi.den().is_constant()) throw UsageError("place must be a polynomial in t");
    return FqtPlace(pi.num().monic());
  }
  throw UsageError("unknown valuation descriptor '" + text + "'");
}

FieldDesc base_field(const AnyValuation& v) {
  return std::visit(
      [](const auto& val) -> FieldDesc {
        using T = std::decay_t<decltype(val)>;
        if constexpr (std::is_same_v<T, PAdicValuation>) {
          return {FieldDesc::Kind::Q, nullptr};
        } else if constexpr (std::is_same_v<T, QtPlace>) {
          return {FieldDesc::Kind::Qt, nullptr};
        } else {
          return {FieldDesc::Kind::Fqt, val.constant_proto().context()};
        }
      },
      v);
}

void require_same_field(const FieldDesc& field, const AnyValuation& v) {
  const FieldDesc b = base_field(v);
  const bool same = field.kind == b.kind && (b.kind != FieldDesc::Kind::Fqt || *field.ctx == *b.ctx);
  if (!same) {
    throw UsageError("valuation lives on " + b.describe() + " but the field is " + field.describe());
  }
}

Rational parse_rational(std::string_view text) {
  return fold<Rational>(
      parse_expression(text, {}), [](const mpz_class& n) { return Rational(n); },
      [](const std::string&) -> Rational { raise(Errc::Unreachable, "no variables"); });
}

GF parse_finite(const GFContextPtr& ctx, std::string_view text) {
  return fold<GF>(
      parse_expression(text, with_u(ctx, {})), [&](const mpz_class& n) { return GF::from_integer(ctx, n); },
      [&](const std::string&) { return GF::generator(ctx); });
}

RationalFunction<Rational> parse_qt(std::string_view text) {
  using RF = RationalFunction<Rational>;
  return fold<RF>(
      parse_expression(text, {"t"}), [](const mpz_class& n) { return RF::constant(Rational(n)); },
      [](const std::string&) { return RF::variable(Rational()); });
}

RationalFunction<Rational> parse_q_x(std::string_view text) {
  using RF = RationalFunction<Rational>;
  return fold<RF>(
      parse_expression(text, {"x"}), [](const mpz_class& n) { return RF::constant(Rational(n)); },
      [](const std::string&) { return RF::variable(Rational()); });
}

RationalFunction<GF> parse_fqt(const GFContextPtr& ctx, std::string_view text) {
  using RF = RationalFunction<GF>;
  return fold<RF>(
      parse_expression(text, with_u(ctx, {"t"})), [&](const mpz_class& n) { return RF::constant(GF::from_integer(ctx, n)); },
      [&](const std::string& name) {
        return name == "u" ? RF::constant(GF::generator(ctx)) : RF::variable(GF(ctx, 0));
      });
}

RationalFunction<GF> parse_finite_x(const GFContextPtr& ctx, std::string_view text) {
  using RF = RationalFunction<GF>;
  return fold<RF>(
      parse_expression(text, with_u(ctx, {"x"})), [&](const mpz_class& n) { return RF::constant(GF::from_integer(ctx, n)); },
      [&](const std::string& name) {
        return name == "u" ? RF::constant(GF::generator(ctx)) : RF::variable(GF(ctx, 0));
      });
}

RationalFunction<RationalFunction<Rational>> parse_qt_x(std::string_view text) {
  using K = RationalFunction<Rational>;
  using RF = RationalFunction<K>;
  return fold<RF>(
      parse_expression(text, {"x", "t"}), [](const mpz_class& n) { return RF::constant(K::constant(Rational(n))); },
      [](const std::string& name) {
        return name == "x" ? RF::variable(K(Rational())) : RF::constant(K::variable(Rational()));
      });
}

RationalFunction<RationalFunction<GF>> parse_fqt_x(const GFContextPtr& ctx, std::string_view text) {
  using K = RationalFunction<GF>;
  using RF = RationalFunction<K>;
  const GF zero(ctx, 0);
  return fold<RF>(
      parse_expression(text, with_u(ctx, {"x", "t"})),
      [&](const mpz_class& n) { return RF::constant(K::constant(GF::from_integer(ctx, n))); },
      [&](const std::string& name) {
        if (name == "x") return RF::variable(K(zero));
        if (name == "t") return RF::constant(K::variable(zero));
        return RF::constant(K::constant(GF::generator(ctx)));
      });
}

}  // namespace conicval
