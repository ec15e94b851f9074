// Randomized engine-vs-oracle checks.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "skeinlab/trace_engine.hpp"
#include "skeinlab/words.hpp"

namespace skeinlab {

// Random reduced word of length (sum of |exponent|) at most max_len, drawn
// as letters with exponents in [-3, 3] before neighbours merge.
GroupWord random_word(std::mt19937_64& stream, int rank, int max_len);

struct FuzzFailure {
  std::size_t trial = 0;
  std::string word;
  int rank = 0;
  std::string expected;  // oracle trace
  std::string got;       // polynomial evaluated at the oracle's subset traces
};

struct FuzzReport {
  std::size_t count = 0;
  int max_rank = 0;
  int max_len = 0;
  ReductionMode mode = ReductionMode::integral;
  std::uint64_t seed = 0;
  std::vector<FuzzFailure> failures;
  std::size_t non_integral = 0;  // evaluations that were not integers
  RuleStats stats;

  bool passed() const { return failures.empty() && non_integral == 0; }
};

// Trial i draws its representation and word from stream (seed, i), so the
// verdicts do not depend on `threads`.
FuzzReport fuzz_check(std::size_t count, int max_rank, int max_len, ReductionMode mode,
                      std::uint64_t seed, unsigned threads = 1);

nlohmann::json to_json(const FuzzReport& report);

struct LaurentCheckReport {
  std::size_t count = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// Diagonal representations x_i -> diag(l_i, 1/l_i) with random nonzero
// rational l_i: the dyadic abelian form of each v must evaluate to l^v + l^-v.
LaurentCheckReport laurent_character_check(const std::vector<AbelianVector>& vectors,
                                           std::uint64_t seed);

}  // namespace skeinlab
