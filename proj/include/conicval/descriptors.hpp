#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "conicval/expr.hpp"
#include "conicval/valuation.hpp"

namespace conicval {

/// A base field: "Q", "Q(t)", "Fq(t):q=N[,mod=m(u)]", "GF(p)", "GF(q)" or
/// "GF(p)[u]/(m(u))".
struct FieldDesc {
  enum class Kind { Q, Qt, Fqt, Finite };

  Kind kind;
  GFContextPtr ctx;  // Fqt and Finite

  std::string describe() const;
  /// Names usable in element expressions: t for function fields, u for
  /// nonprime finite constants.
  std::vector<std::string> variables() const;
};

FieldDesc parse_field(std::string_view text);

using AnyValuation = std::variant<PAdicValuation, QtPlace, FqtPlace>;

/// "Q:p=5", "Q(t):place=t-2", "Fq(t):q=3,place=t^2+1", "Fq(t):q=9,mod=u^2+1,place=inf".
/// The dyadic valuation is rejected with a UsageError.
AnyValuation parse_valuation(std::string_view text);

FieldDesc base_field(const AnyValuation& v);

/// UsageError unless the valuation lives on `field`.
void require_same_field(const FieldDesc& field, const AnyValuation& v);

Rational parse_rational(std::string_view text);
GF parse_finite(const GFContextPtr& ctx, std::string_view text);
RationalFunction<Rational> parse_qt(std::string_view text);
RationalFunction<GF> parse_fqt(const GFContextPtr& ctx, std::string_view text);
RationalFunction<Rational> parse_q_x(std::string_view text);
RationalFunction<GF> parse_finite_x(const GFContextPtr& ctx, std::string_view text);
RationalFunction<RationalFunction<Rational>> parse_qt_x(std::string_view text);
RationalFunction<RationalFunction<GF>> parse_fqt_x(const GFContextPtr& ctx, std::string_view text);

/// An element of the base field of v.
inline Rational parse_base(const PAdicValuation&, std::string_view text) { return parse_rational(text); }
inline RationalFunction<Rational> parse_base(const QtPlace&, std::string_view text) { return parse_qt(text); }
inline RationalFunction<GF> parse_base(const FqtPlace& v, std::string_view text) {
  return parse_fqt(v.constant_proto().context(), text);
}

/// An element of E(x) for E the base field of v.
inline RationalFunction<Rational> parse_function(const PAdicValuation&, std::string_view text) {
  return parse_q_x(text);
}
inline RationalFunction<RationalFunction<Rational>> parse_function(const QtPlace&, std::string_view text) {
  return parse_qt_x(text);
}
inline RationalFunction<RationalFunction<GF>> parse_function(const FqtPlace& v, std::string_view text) {
  return parse_fqt_x(v.constant_proto().context(), text);
}

}  // namespace conicval
