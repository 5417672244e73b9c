#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "conicval/error.hpp"

namespace conicval {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Parsed expression over integers and declared variables.
struct Expr {
  enum class Kind { Integer, Variable, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind;
  std::size_t offset = 0;
  mpz_class integer;  // Integer
  std::string name;   // Variable
  long exponent = 0;  // Pow
  ExprPtr lhs, rhs;   // Neg uses lhs only
};

/// Recursive descent parser. Precedence from loosest: + and -, then * and /,
/// then unary minus, then ^ (integer exponents, possibly negative). So -x^2
/// is -(x^2). Identifiers must appear in `variables`.
ExprPtr parse_expression(std::string_view text, const std::vector<std::string>& variables);

/// Fully parenthesized rendering of the tree, mainly for diagnostics.
std::string print(const Expr& e);

/// Folds an expression into a field. `number` maps integers and `variable`
/// maps declared names; division by zero surfaces from the field.
template <class T, class Num, class Var>
T evaluate(const Expr& e, const Num& number, const Var& variable) {
  switch (e.kind) {
    case Expr::Kind::Integer:
      return number(e.integer);
    case Expr::Kind::Variable:
      return variable(e.name);
    case Expr::Kind::Neg:
      return -evaluate<T>(*e.lhs, number, variable);
    case Expr::Kind::Add:
      return evaluate<T>(*e.lhs, number, variable) + evaluate<T>(*e.rhs, number, variable);
    case Expr::Kind::Sub:
      return evaluate<T>(*e.lhs, number, variable) - evaluate<T>(*e.rhs, number, variable);
    case Expr::Kind::Mul:
      return evaluate<T>(*e.lhs, number, variable) * evaluate<T>(*e.rhs, number, variable);
    case Expr::Kind::Div: {
      T d = evaluate<T>(*e.rhs, number, variable);
      if (d.is_zero()) raise(Errc::DivisionByZero, "division by zero at offset " + std::to_string(e.rhs->offset));
      return evaluate<T>(*e.lhs, number, variable) / d;
    }
    case Expr::Kind::Pow: {
      T base = evaluate<T>(*e.lhs, number, variable);
      T acc = number(mpz_class(1));
      long k = e.exponent < 0 ? -e.exponent : e.exponent;
      T sq = base;
      while (k > 0) {
        if (k & 1) acc = acc * sq;
        k >>= 1;
        if (k > 0) sq = sq * sq;
      }
      if (e.exponent < 0) {
        if (acc.is_zero()) raise(Errc::DivisionByZero, "negative power of zero");
        acc = number(mpz_class(1)) / acc;
      }
      return acc;
    }
  }
  raise(Errc::Unreachable, "unknown expression kind");
}

}  // namespace conicval
