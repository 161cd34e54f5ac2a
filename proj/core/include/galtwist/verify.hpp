#pragma once

// The acceptance suites, shared by `galtwist verify` and the acceptance test.
// Each suite runs a fixed grid of instances and records every failing
// instance with its full parameters.

#include <cstddef>
#include <string>
#include <vector>

namespace galtwist::verify {

struct SuiteResult {
  int id = 0;
  std::string name;
  std::string description;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool passed() const noexcept { return checked > 0 && failures.empty(); }
};

struct SuiteInfo {
  int id;
  const char* name;
  const char* description;
};

/// Suites in id order (1..10).
const std::vector<SuiteInfo>& suites();

/// Runs one suite by name or by its decimal id. Throws PreconditionError for
/// an unknown name.
SuiteResult run_suite(const std::string& name, unsigned workers = 1);

/// Every suite in order.
std::vector<SuiteResult> run_all(unsigned workers = 1);

}  // namespace galtwist::verify
