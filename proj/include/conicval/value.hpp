#pragma once

#include <compare>
#include <string>

namespace conicval {

/// An element of (1/2)Z or +infinity. Stored as twice the value.
class Value {
 public:
  constexpr Value() = default;
  static constexpr Value integer(long n) { return Value(false, 2 * n); }
  static constexpr Value halves(long twice) { return Value(false, twice); }
  static constexpr Value infinity() { return Value(true, 0); }

  constexpr bool is_infinite() const { return inf_; }
  constexpr bool is_integer() const { return !inf_ && twice_ % 2 == 0; }
  constexpr long twice() const { return twice_; }
  /// Integer value; only meaningful when is_integer().
  constexpr long as_integer() const { return twice_ / 2; }

  friend constexpr Value operator+(Value a, Value b) {
    if (a.inf_ || b.inf_) return infinity();
    return halves(a.twice_ + b.twice_);
  }
  friend constexpr Value operator-(Value a, Value b) { return halves(a.twice_ - b.twice_); }
  constexpr Value operator-() const { return halves(-twice_); }

  friend constexpr bool operator==(Value a, Value b) { return a.inf_ == b.inf_ && (a.inf_ || a.twice_ == b.twice_); }
  friend constexpr std::strong_ordering operator<=>(Value a, Value b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_ ? std::strong_ordering::equal
                                 : a.inf_     ? std::strong_ordering::greater
                                              : std::strong_ordering::less;
    return a.twice_ <=> b.twice_;
  }

  /// "3", "-1/2" or "inf".
  std::string to_string() const;

 private:
  constexpr Value(bool inf, long twice) : inf_(inf), twice_(twice) {}

  bool inf_ = false;
  long twice_ = 0;
};

/// A subgroup gZ of (1/2)Z containing Z, g in {1, 1/2}.
class ValueGroup {
 public:
  static constexpr ValueGroup integers() { return ValueGroup(false); }
  static constexpr ValueGroup half_integers() { return ValueGroup(true); }

  constexpr bool has_halves() const { return halves_; }
  constexpr Value generator() const { return halves_ ? Value::halves(1) : Value::integer(1); }
  constexpr bool contains(Value v) const { return !v.is_infinite() && (halves_ || v.is_integer()); }
  /// Index over Z: 1 or 2.
  constexpr int index() const { return halves_ ? 2 : 1; }

  friend constexpr bool operator==(ValueGroup, ValueGroup) = default;

  /// "Z" or "1/2 Z".
  std::string to_string() const { return halves_ ? "1/2 Z" : "Z"; }

 private:
  constexpr explicit ValueGroup(bool halves) : halves_(halves) {}
  bool halves_;
};

}  // namespace conicval
