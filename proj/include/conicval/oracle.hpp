#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "conicval/finite_field.hpp"
#include "conicval/rational.hpp"
#include "conicval/rational_function.hpp"
#include "conicval/value.hpp"

namespace conicval {

/// Outcome of an oracle cross-check.
struct OracleReport {
  std::string name;
  std::string inputs_digest;
  bool agreement = true;
  long checks = 0;
  std::optional<std::string> counterexample;
};

/// Hex FNV-1a digest of a string.
std::string digest(const std::string& s);

/// Exhaustive search over F_q^3 (y outer, then x, then z) for a x^2 + b y^2 = z^2.
std::optional<std::array<GF, 3>> isotropy_search(const GF& a, const GF& b);

/// Search over integer (x, y) with max(|x|,|y|) <= bound for a x^2 + b y^2 a
/// rational square.
std::optional<std::array<Rational, 3>> isotropy_search(const Rational& a, const Rational& b, long bound);

/// [F_p(X) : F_p(Y)] as the least n admitting a nonzero P(X, Y) with
/// deg_X P <= n, deg_Y P <= n and P(X, Y(X)) = 0, found by linear algebra
/// over F_p. Requires p <= 13 and Y nonconstant.
int degree_oracle(const RationalFunction<GF>& y);

/// Number of square roots of a in Z_p modulo p^k (after removing the even
/// power of p), by brute force mod p and digit-by-digit lifting.
int hensel_count(std::uint64_t p, const Rational& a, int k = 4);

/// Checks w(xy) = w(x) + w(y) and the ultrametric inequality (with equality
/// when the values differ) on n pairs from `sample`.
template <class T>
OracleReport valuation_axiom_fuzz(const std::string& name, const std::function<T(std::mt19937_64&)>& sample,
                                  const std::function<T(const T&, const T&)>& mul,
                                  const std::function<T(const T&, const T&)>& add,
                                  const std::function<Value(const T&)>& value,
                                  const std::function<std::string(const T&)>& format, long n,
                                  std::uint64_t seed) {
  OracleReport rep{name, digest(name + ":" + std::to_string(seed) + ":" + std::to_string(n)), true, 0, std::nullopt};
  std::mt19937_64 rng(seed);
  for (long i = 0; i < n; ++i) {
    T x = sample(rng), y = sample(rng);
    const Value vx = value(x), vy = value(y);
    if (vx.is_infinite() || vy.is_infinite()) continue;
    ++rep.checks;
    const Value vm = value(mul(x, y));
    const Value vs = value(add(x, y));
    std::string failure;
    if (vm != vx + vy) {
      failure = "w(xy) = " + vm.to_string() + " but w(x) + w(y) = " + (vx + vy).to_string();
    } else if (vs < std::min(vx, vy)) {
      failure = "w(x+y) = " + vs.to_string() + " below min";
    } else if (vx != vy && vs != std::min(vx, vy)) {
      failure = "w(x+y) = " + vs.to_string() + " differs from the strict minimum";
    }
    if (!failure.empty()) {
      rep.agreement = false;
      rep.counterexample = failure + " for x = " + format(x) + ", y = " + format(y);
      return rep;
    }
  }
  return rep;
}

}  // namespace conicval
