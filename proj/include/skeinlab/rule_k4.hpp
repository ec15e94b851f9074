// The size-4 trace reduction rule used by dyadic mode:
//
//   2 tr(M1 M2 M3 M4) = sum_m c_m m(t_T),   T subset of {1,2,3,4}, |T| <= 3,
//
// where t_T is the trace of the product of the M_i, i in T, in increasing
// order. The coefficients are not hard-coded; they are solved exactly from
// sampled SL2(Z) quadruples and then checked on fresh samples.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "skeinlab/oracle.hpp"
#include "skeinlab/poly.hpp"

namespace skeinlab {

struct RuleK4 {
  TracePoly rhs;             // right-hand side, variables t_T with T within {1,2,3,4}
  unsigned weight_bound = 0; // candidate basis bound that produced the solve
  std::size_t candidates = 0;
  std::size_t fit_samples = 0;
  std::size_t verify_samples = 0;
};

class RuleK4Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Monomials in t_T (T within {1..4}, 1 <= |T| <= 3) in which each index occurs
// an odd number of times, with subscript weight <= weight_bound.
std::vector<Monomial> rule_k4_candidates(unsigned weight_bound);

// Tries weight bounds 4, 6, 8 in turn. Throws RuleK4Error if none gives a
// unique consistent solution or if held-out verification fails.
RuleK4 derive_rule_k4(std::uint64_t oracle_seed, std::size_t verify_samples = 100);

// rhs(t_T) - 2 tr(M1 M2 M3 M4); zero when the rule holds for `quad`.
BigInt rule_k4_residual(const RuleK4& rule, const Representation& quad);

// Rule derived once with the library's fixed seed (thread-safe).
const RuleK4& default_rule_k4();

}  // namespace skeinlab
