// Canonical trace polynomials of free-group words.
//
// reduce() rewrites tr(w) into a polynomial in the subset traces
// t_S = tr(g_{i1} ... g_{ik}), i1 < ... < ik, using (highest priority first,
// leftmost position first):
//
//   R0  cyclic reduction and a memo lookup by cyclic class
//   R1  |exponent| >= 2:  tr(U g^k V) = t_g tr(U g^(k-1) V) - tr(U g^(k-2) V)
//   R2  exponent -1:      tr(U g^-1 V) = t_g tr(U V) - tr(U g V)
//   R3  repeated letter:  tr(X A X B) = tr(X A) tr(X B) - tr(A B^-1)
//   R4  unsorted pair:    tr(A C B) = t_A t_BC + t_B t_AC + t_C t_AB - t_A t_B t_C - tr(A B C)
//   R5  (dyadic) sorted word of length >= 4 through the size-4 rule
//
// Each rule only produces shorter words, or words of the same length that are
// smaller in (exponent >= 2 count, negative count, repeats, inversions).

#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "skeinlab/poly.hpp"
#include "skeinlab/rule_k4.hpp"
#include "skeinlab/words.hpp"

namespace skeinlab {

enum class ReductionMode { integral, dyadic };

std::string to_string(ReductionMode mode);
// "integral" or "dyadic"; throws std::invalid_argument otherwise.
ReductionMode parse_mode(const std::string& text);

struct RuleStats {
  std::uint64_t r1 = 0, r2 = 0, r3 = 0, r4 = 0, r5 = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t base = 0;

  RuleStats& operator+=(const RuleStats& o);
};

// Not thread-safe: one engine per worker. Results depend only on
// (word, mode, rule), so engines in different threads agree.
class TraceEngine {
 public:
  explicit TraceEngine(ReductionMode mode);
  TraceEngine(ReductionMode mode, const RuleK4& rule);

  ReductionMode mode() const { return mode_; }
  TracePoly reduce(const GroupWord& w);

  const RuleStats& stats() const { return stats_; }
  std::size_t memo_size() const { return memo_.size(); }
  void clear_memo() { memo_.clear(); }

 private:
  TracePoly reduce_canonical(const GroupWord& c);
  TracePoly compute(const GroupWord& c);
  TracePoly apply_rule_k4(const GroupWord& c);

  ReductionMode mode_;
  const RuleK4* rule_ = nullptr;
  std::unordered_map<CyclicKey, TracePoly, CyclicKeyHash> memo_;
  RuleStats stats_;
};

// One-shot reduction with a fresh engine.
TracePoly reduce_trace(const GroupWord& w, ReductionMode mode);

// Integral: all 2^n - 1 nonempty subsets. Dyadic: subsets of size 1, 2, 3.
// Sorted by SubsetVar order.
std::vector<SubsetVar> skein_basis_vars(int n, ReductionMode mode);

}  // namespace skeinlab
