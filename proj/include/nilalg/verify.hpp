#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilalg/field.hpp"

namespace nilalg {

struct CheckResult {
  int id = 0;               // criterion number
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // enforced wall-clock budget
  std::string details;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int workers = 1;
  long long max_nodes = 10'000'000;
  /// Directory holding the golden JSON transcriptions and frozen regression
  /// values (defaults to the build-time source path).
  std::string golden_dir;
  /// Largest census dimension to scan (3 = full 2^27 run).
  int census_max_dim = 3;
};

/// Suites: "s2" (characteristic sequences, metamorphic invariance),
/// "s3" (family fidelity, parameter maps, natural grading),
/// "s4" (rank bound, orbit fixed points, pairwise separation),
/// "census" (small-dimension theorem verification), "all".
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

std::vector<std::string> known_suites();

} // namespace nilalg
