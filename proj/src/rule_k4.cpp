#include "skeinlab/rule_k4.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>

#include "skeinlab/linalg.hpp"

namespace skeinlab {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x4b34;

std::vector<SubsetVar> quad_vars() {
  std::vector<SubsetVar> vars;
  for (std::uint64_t mask = 1; mask < 16; ++mask)
    if (std::popcount(mask) <= 3) vars.emplace_back(mask);
  std::sort(vars.begin(), vars.end());
  return vars;
}

BigInt quad_trace(const Representation& quad) {
  return (quad.image(1) * quad.image(2) * quad.image(3) * quad.image(4)).trace();
}

}  // namespace

std::vector<Monomial> rule_k4_candidates(unsigned weight_bound) {
  const auto vars = quad_vars();
  std::vector<Monomial> out;
  std::vector<Factor> current;
  std::function<void(std::size_t, unsigned, unsigned)> rec = [&](std::size_t i, unsigned weight,
                                                                 unsigned parity) {
    if (i == vars.size()) {
      if (parity == 0xF) out.emplace_back(current);
      return;
    }
    rec(i + 1, weight, parity);
    const auto w = static_cast<unsigned>(vars[i].size());
    for (unsigned e = 1; weight + e * w <= weight_bound; ++e) {
      current.push_back({vars[i], e});
      rec(i + 1, weight + e * w,
          (e & 1U) ? parity ^ static_cast<unsigned>(vars[i].mask()) : parity);
      current.pop_back();
    }
  };
  rec(0, 0, 0);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
  return out;
}

RuleK4 derive_rule_k4(std::uint64_t oracle_seed, std::size_t verify_samples) {
  const auto vars = quad_vars();
  for (unsigned bound : {4U, 6U, 8U}) {
    const auto cands = rule_k4_candidates(bound);
    const std::size_t rows = 2 * cands.size() + 8;
    auto stream = make_stream(oracle_seed, bound);

    RationalMatrix a;
    std::vector<BigRational> b;
    a.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      const auto quad = Representation::sample(4, stream);
      const auto traces = quad.subset_traces(vars);
      std::vector<BigRational> row;
      row.reserve(cands.size());
      for (const auto& m : cands) row.push_back(evaluate(TracePoly::term(1, m), traces));
      a.push_back(std::move(row));
      b.emplace_back(2 * quad_trace(quad));
    }

    const auto sol = solve(a, b);
    if (sol.status != SolveStatus::unique) continue;

    RuleK4 rule;
    for (std::size_t i = 0; i < cands.size(); ++i) rule.rhs.add_term(sol.x[i], cands[i]);
    rule.weight_bound = bound;
    rule.candidates = cands.size();
    rule.fit_samples = rows;
    rule.verify_samples = verify_samples;

    auto fresh = make_stream(oracle_seed ^ 0xfeedULL, 1000 + bound);
    for (std::size_t i = 0; i < verify_samples; ++i) {
      if (rule_k4_residual(rule, Representation::sample(4, fresh)) != 0)
        throw RuleK4Error("size-4 rule failed held-out verification at weight bound " +
                          std::to_string(bound));
    }
    return rule;
  }
  throw RuleK4Error("no consistent size-4 rule up to weight bound 8");
}

BigInt rule_k4_residual(const RuleK4& rule, const Representation& quad) {
  if (quad.rank() != 4) throw std::invalid_argument("size-4 rule needs four matrices");
  const BigRational lhs = evaluate(rule.rhs, quad.subset_traces(quad_vars()));
  const BigRational diff = lhs - BigRational(2 * quad_trace(quad));
  if (!is_integral(diff)) throw RuleK4Error("non-integral residual");
  return diff.get_num();
}

const RuleK4& default_rule_k4() {
  static const RuleK4 rule = derive_rule_k4(kDefaultSeed);
  return rule;
}

}  // namespace skeinlab
