#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symcone/json_io.hpp"

namespace symcone::cli {

enum ExitCode : int { kSuccess = 0, kInvalidInput = 1, kNumericalFailure = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// error objects {"error": kind, "message": text} to `err`; `in` backs "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

struct SuiteResult {
  std::string name;
  bool passed = true;
  int samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
};

std::vector<std::string> suite_names();

/// Property suites behind `verify`. An empty name runs all of them.
std::vector<SuiteResult> run_suites(std::uint64_t seed, const std::string& only = {});

Json to_json(const SuiteResult& r);

}  // namespace symcone::cli
