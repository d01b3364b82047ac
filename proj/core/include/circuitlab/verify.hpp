#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace circuitlab {

struct CheckRecord {
  std::string description;
  std::string expected;
  std::string observed;
  bool pass = false;
  double seconds = 0;
  bool sampled = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  bool passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

struct SuiteOptions {
  std::size_t sample = 0; // 0 runs exhaustively where a suite supports both
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  std::size_t depth_limit = 4;
};

const std::vector<std::string> &suite_names();

// Throws InvalidArgument for an unknown suite. Budget overruns inside a check
// are recorded as failed checks.
VerificationReport run_suite(const std::string &name,
                             const SuiteOptions &opts = {});

} // namespace circuitlab
