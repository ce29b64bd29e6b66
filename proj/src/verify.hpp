#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hilb {

/// Default seed for the randomized suites; any run with the same seed and
/// options reproduces the report byte for byte.
inline constexpr std::uint64_t kDefaultSeed = 271828;

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail; // empty on pass, first failing instance otherwise
  double millis = 0.0;
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::vector<CriterionResult> items;
  double millis = 0.0;
};

struct VerifyOptions {
  std::optional<int> n;      // restrict to a single n instead of the default range
  std::optional<int> trials; // override the per-suite randomized trial count
  std::uint64_t seed = kDefaultSeed;
};

/// The named acceptance suites, in report order.
std::vector<std::string> suite_names();

/// Runs one suite; throws DomainError on an unknown name or unusable options.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

} // namespace hilb
