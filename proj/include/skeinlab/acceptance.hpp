// The acceptance suite, shared by `skeinlab selftest` and the acceptance test.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace skeinlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no time limit
  std::string detail;
};

struct AcceptanceOptions {
  bool quick = false;  // caps fuzz counts at 100
  std::uint64_t seed = 0;
};

// Runs criteria 1..10 in order. `only`, when nonzero, selects one criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, int only = 0);

// One pass/fail line. Timings make the line run-dependent, so they are optional.
std::string format_line(const CriterionResult& r, bool with_timing = true);
nlohmann::json to_json(const std::vector<CriterionResult>& results);

}  // namespace skeinlab
