// Full acceptance run: one line per criterion, nonzero exit if any fails.

#include <cstdlib>
#include <iostream>

#include "skeinlab/acceptance.hpp"

int main() {
  skeinlab::AcceptanceOptions options;
  if (const char* seed = std::getenv("SKEINLAB_SEED")) options.seed = std::strtoull(seed, nullptr, 10);
  bool all = true;
  for (const auto& r : skeinlab::run_acceptance(options)) {
    std::cout << skeinlab::format_line(r) << std::endl;
    all = all && r.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
