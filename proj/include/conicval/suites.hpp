#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conicval/oracle.hpp"

namespace conicval {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Overrides the sample count of randomized suites when positive.
  long samples = 0;
};

struct SuiteResult {
  std::string name;
  std::string description;
  bool passed = true;
  long checks = 0;
  long skipped = 0;
  double seconds = 0;
  std::optional<double> time_limit;
  /// The first few disagreements, each a self-contained message.
  std::vector<std::string> failures;
  std::vector<OracleReport> reports;
};

/// Names in acceptance order.
const std::vector<std::string>& suite_names();
std::string suite_description(const std::string& name);

/// Runs one suite; UsageError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace conicval
