#include "conicval/expr.hpp"

#include <algorithm>
#include <cctype>

namespace conicval {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  ExprPtr run() {
    auto e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::SyntaxError, pos_, what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::shared_ptr<Expr> node(Expr::Kind k, std::size_t at, ExprPtr l, ExprPtr r = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->offset = at;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  ExprPtr sum() {
    auto e = product();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('+')) {
        e = node(Expr::Kind::Add, at, e, product());
      } else if (accept('-')) {
        e = node(Expr::Kind::Sub, at, e, product());
      } else {
        return e;
      }
    }
  }

  ExprPtr product() {
    auto e = unary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) {
        e = node(Expr::Kind::Mul, at, e, unary());
      } else if (accept('/')) {
        e = node(Expr::Kind::Div, at, e, unary());
      } else {
        return e;
      }
    }
  }

  ExprPtr unary() {
    skip();
    const std::size_t at = pos_;
    if (accept('-')) return node(Expr::Kind::Neg, at, unary());
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    skip();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    const bool paren = accept('(');
    bool neg = false;
    if (accept('-')) neg = true;
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer exponent");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ - start > 6) {
      pos_ = start;
      fail("exponent too large");
    }
    long k = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    auto e = node(Expr::Kind::Pow, at, base);
    e->exponent = neg ? -k : k;
    return e;
  }

  ExprPtr primary() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (accept('(')) {
      auto e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto e = node(Expr::Kind::Integer, at, nullptr);
      e->integer = mpz_class(std::string(s_.substr(at, pos_ - at)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(at, pos_ - at));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        throw ParseError(ParseError::Kind::UndeclaredVariable, at, "'" + name + "' is not declared here");
      }
      auto e = node(Expr::Kind::Variable, at, nullptr);
      e->name = std::move(name);
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).run();
}

std::string print(const Expr& e) {
  auto bin = [&](const char* op) { return "(" + print(*e.lhs) + " " + op + " " + print(*e.rhs) + ")"; };
  switch (e.kind) {
    case Expr::Kind::Integer:
      return e.integer.get_str();
    case Expr::Kind::Variable:
      return e.name;
    case Expr::Kind::Neg:
      return "(-" + print(*e.lhs) + ")";
    case Expr::Kind::Add:
      return bin("+");
    case Expr::Kind::Sub:
      return bin("-");
    case Expr::Kind::Mul:
      return bin("*");
    case Expr::Kind::Div:
      return bin("/");
    case Expr::Kind::Pow:
      return "(" + print(*e.lhs) + "^(" + std::to_string(e.exponent) + "))";
  }
  return "?";
}

}  // namespace conicval
