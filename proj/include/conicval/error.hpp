#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace conicval {

enum class Errc {
  DivisionByZero,
  ContextMismatch,
  ZeroInput,
  ZeroPolynomial,
  DegreeTooLarge,
  NegativeValue,
  NonzeroValue,
  InvalidPivot,
  NotInSubfield,
  ConstantInput,
  SquareInput,
  NotUnitUnit,
  UnsupportedField,
  UnsupportedPlace,
  PreconditionViolated,
  WitnessNotFound,
  PrecisionTooLow,
  ZeroElement,
  InvalidArgument,
  Unreachable,
};

std::string_view errc_name(Errc code);

/// A mathematical error: the inputs were well-formed but violate an
/// operation's precondition (division by zero, value not zero, ...).
class MathError : public std::runtime_error {
 public:
  MathError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Malformed user input: bad descriptors, unknown variables, syntax errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public UsageError {
 public:
  enum class Kind { SyntaxError, UndeclaredVariable };

  ParseError(Kind kind, std::size_t offset, const std::string& what)
      : UsageError((kind == Kind::SyntaxError ? "SyntaxError at offset " : "UndeclaredVariable at offset ") +
                   std::to_string(offset) + ": " + what),
        kind_(kind),
        offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw MathError(code, what); }

}  // namespace conicval
