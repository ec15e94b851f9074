#include "skeinlab/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include "skeinlab/charvar.hpp"
#include "skeinlab/fuzz.hpp"
#include "skeinlab/oracle.hpp"
#include "skeinlab/rule_k4.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/trace_engine.hpp"

namespace skeinlab {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

AbelianVector random_vector(std::mt19937_64& stream) {
  std::uniform_int_distribution<int> rank_dist(1, 3);
  std::uniform_int_distribution<long> coord(-4, 4);
  std::vector<long> v(static_cast<std::size_t>(rank_dist(stream)));
  for (auto& c : v) c = coord(stream);
  return make_abelian_vector(std::move(v));
}

AbelianVector random_vector(std::mt19937_64& stream, int rank) {
  std::uniform_int_distribution<long> coord(-4, 4);
  std::vector<long> v(static_cast<std::size_t>(rank));
  for (auto& c : v) c = coord(stream);
  return make_abelian_vector(std::move(v));
}

LaurentPoly symmetric_of(const AbelianVector& v) { return symmetric_monomial(v.coords); }

Outcome oracle_equivalence(const AcceptanceOptions& o) {
  const std::size_t count = o.quick ? 100 : 1000;
  std::ostringstream detail;
  bool ok = true;
  for (auto mode : {ReductionMode::integral, ReductionMode::dyadic}) {
    const FuzzReport r = fuzz_check(count, 4, 12, mode, o.seed);
    ok = ok && r.passed();
    detail << to_string(mode) << ": " << r.failures.size() << "/" << count << " failures, "
           << r.non_integral << " non-integral; ";
  }
  return {ok, detail.str()};
}

// Number of forms over F_n (n <= 4, 500 words) with a variable or
// coefficient that fails the predicates.
std::size_t nonconforming(ReductionMode mode, std::uint64_t seed, int max_len,
                          const std::function<bool(SubsetVar, int)>& var_ok,
                          const std::function<bool(const BigRational&)>& coeff_ok) {
  std::size_t bad = 0;
  std::vector<TraceEngine> engines;
  for (int n = 1; n <= 4; ++n) engines.emplace_back(mode);
  for (std::size_t i = 0; i < 500; ++i) {
    auto stream = make_stream(seed, 0x200 + i);
    const int n = 1 + static_cast<int>(i % 4);
    const TracePoly p = engines[static_cast<std::size_t>(n - 1)].reduce(random_word(stream, n, max_len));
    bool ok = true;
    for (const auto& [m, c] : p.terms()) {
      ok = ok && coeff_ok(c);
      for (const auto& f : m.factors()) ok = ok && var_ok(f.var, n);
    }
    if (!ok) ++bad;
  }
  return bad;
}

Outcome generator_conformance(const AcceptanceOptions& o) {
  const std::size_t bad = nonconforming(
      ReductionMode::integral, o.seed, 16,
      [](SubsetVar v, int n) { return v.mask() != 0 && (v.mask() >> n) == 0; },
      [](const BigRational& c) { return is_integral(c); });
  bool universe_ok = true;
  std::ostringstream detail;
  for (int n = 1; n <= 4; ++n) {
    const auto size = skein_basis_vars(n, ReductionMode::integral).size();
    universe_ok = universe_ok && size == (std::size_t{1} << n) - 1;
    detail << "n=" << n << ": " << size << " vars; ";
  }
  detail << bad << "/500 nonconforming forms";
  return {bad == 0 && universe_ok, detail.str()};
}

Outcome dyadic_conformance(const AcceptanceOptions& o) {
  const std::size_t bad = nonconforming(
      ReductionMode::dyadic, o.seed, 16,
      [](SubsetVar v, int n) { return v.size() <= 3 && (v.mask() >> n) == 0; },
      [](const BigRational& c) { return is_dyadic(c); });
  const auto size = skein_basis_vars(4, ReductionMode::dyadic).size();
  std::ostringstream detail;
  detail << "n=4 universe " << size << " vars; " << bad << "/500 nonconforming forms";
  return {bad == 0 && size == 14, detail.str()};
}

Outcome rule_k4_bootstrap(const AcceptanceOptions& o) {
  const RuleK4 rule = derive_rule_k4(o.seed ^ 0x4b34, 100);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    auto stream = make_stream(o.seed, 0x400 + i);
    if (rule_k4_residual(rule, Representation::sample(4, stream)) != 0) ++nonzero;
  }
  std::ostringstream detail;
  detail << "weight bound " << rule.weight_bound << ", " << rule.candidates << " candidates, "
         << nonzero << "/100 nonzero held-out residuals";
  return {rule.weight_bound <= 6 && nonzero == 0, detail.str()};
}

Outcome x_z2_equation(const AcceptanceOptions&) {
  const bool main = check_x_z2_identity();
  const bool other = check_x_z2_identity(-4, true);
  const bool perturbed = check_x_z2_identity(-5);
  std::ostringstream detail;
  detail << "b' pairing " << (main ? "zero" : "nonzero") << ", b'' pairing "
         << (other ? "zero" : "nonzero") << ", constant -5 " << (perturbed ? "zero" : "nonzero");
  return {main && other && !perturbed, detail.str()};
}

Outcome abelian_soundness(const AcceptanceOptions& o) {
  std::size_t bad_trip = 0, bad_product = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    auto stream = make_stream(o.seed, 0x600 + i);
    const AbelianVector v = random_vector(stream);
    const auto mode = i % 2 ? ReductionMode::integral : ReductionMode::dyadic;
    if (to_laurent(abelian_from_vector(v, mode)) != symmetric_of(v)) ++bad_trip;

    const AbelianVector w = random_vector(stream, v.rank);
    const SkeinElement x = abelian_from_vector(v), y = abelian_from_vector(w);
    if (to_laurent(abelian_multiply(x, y)) != symmetric_of(v) * symmetric_of(w)) ++bad_product;
  }
  std::vector<AbelianVector> vs;
  auto stream = make_stream(o.seed, 0x6ff);
  for (int i = 0; i < 500; ++i) vs.push_back(random_vector(stream));
  const LaurentCheckReport chars = laurent_character_check(vs, o.seed);
  std::ostringstream detail;
  detail << bad_trip << "/500 round-trip, " << bad_product << "/500 product, "
         << chars.failures.size() << "/500 character mismatches";
  return {bad_trip == 0 && bad_product == 0 && chars.passed(), detail.str()};
}

Outcome two_bridge_pipeline(const AcceptanceOptions&) {
  bool ok = true;
  std::ostringstream detail;
  for (const std::string name : {"trefoil", "fig8"}) {
    const auto p = two_bridge_preset(name);
    CharVarResult r;
    try {
      r = two_bridge_charpoly(p);
    } catch (const NonExactDivision& e) {
      detail << name << ": " << e.what() << "; ";
      ok = false;
      continue;
    }
    const RileyReport riley = riley_cross_check(p, r);
    const TracePoly swapped = two_bridge_swapped_q(p);
    bool this_ok = !r.q.is_zero() && r.square_free && r.phi_at_22 != 0 && riley.passed() &&
                   (swapped == r.q || swapped == -r.q);
    if (name == "trefoil") {
      // Phi(t1, 1) == 0 identically.
      const TracePoly on_line = r.phi.substitute([](SubsetVar v) -> std::optional<TracePoly> {
        if (v == SubsetVar(0b11)) return TracePoly::constant(1);
        return std::nullopt;
      });
      this_ok = this_ok && r.phi.total_degree() == 1 && on_line.is_zero();
    }
    ok = ok && this_ok;
    detail << name << ": Phi = " << to_string(r.phi) << ", Phi(2,2) = " << to_string(r.phi_at_22)
           << ", riley " << riley.relation_holds << "/" << riley.points << "; ";
  }
  return {ok, detail.str()};
}

Outcome relation_harvest(const AcceptanceOptions& o) {
  const RelationBasis z2 = harvest_relations(parse_group_spec("abelian:2"), 3, 0, o.seed);
  const RelationBasis f2 = harvest_relations(parse_group_spec("free:2"), 4, 0, o.seed);
  const SubsetVar u1(0b01), u2(0b10), v12(0b11);
  const TracePoly a1 = TracePoly::variable(u1), a2 = TracePoly::variable(u2), b = TracePoly::variable(v12);
  const TracePoly z2_relation = a1 * a1 + a2 * a2 + b * b - a1 * a2 * b - TracePoly::constant(4);
  const bool z2_ok = z2.relations.size() == 1 &&
                     (z2.relations[0] == z2_relation || z2.relations[0] == -z2_relation);
  std::ostringstream detail;
  detail << "abelian:2 deg 3: " << z2.relations.size() << " relation(s)";
  if (!z2.relations.empty()) detail << " [" << to_string(z2.relations[0], VarStyle::abelian) << "]";
  detail << "; free:2 deg 4: " << f2.relations.size() << " relation(s)";
  return {z2_ok && f2.relations.empty(), detail.str()};
}

Outcome tangent_dimensions(const AcceptanceOptions& o) {
  struct Case {
    const char* group;
    unsigned degree;
    std::size_t expected;
  };
  bool ok = true;
  std::ostringstream detail;
  for (const Case c : {Case{"abelian:2", 3, 3}, Case{"abelian:3", 4, 6}, Case{"free:3", 6, 7}}) {
    const RelationBasis b = harvest_relations(parse_group_spec(c.group), c.degree, 0, o.seed);
    const TangentReport t = tangent_dim_at_trivial(b);
    ok = ok && t.tangent_dim == c.expected && t.gradients_vanish;
    detail << c.group << " deg " << c.degree << ": " << b.relations.size() << " relations, tangent "
           << t.tangent_dim << " (want " << c.expected << ")"
           << (t.gradients_vanish ? "" : ", nonzero gradient") << "; ";
  }
  return {ok, detail.str()};
}

Outcome algebra_axioms(const AcceptanceOptions& o) {
  std::size_t bad = 0;
  for (auto mode : {ReductionMode::integral, ReductionMode::dyadic}) {
    TraceEngine engine(mode);
    if (!(engine.reduce(GroupWord(3)) == TracePoly::constant(2))) ++bad;
    for (std::size_t i = 0; i < 200; ++i) {
      auto stream = make_stream(o.seed, 0xa00 + i);
      const int n = 1 + static_cast<int>(i % 4);
      const GroupWord g = random_word(stream, n, 8), h = random_word(stream, n, 8),
                      k = random_word(stream, n, 8);
      const SkeinElement x = from_word(engine, g), y = from_word(engine, h), z = from_word(engine, k);
      if (!(multiply(x, y) == multiply(y, x))) ++bad;
      if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)))) ++bad;
      if (!(from_word(engine, GroupWord(n)) == skein_constant(n, mode, GroupKind::free_group, 2))) ++bad;
      if (!(engine.reduce(g) == engine.reduce(invert(g)))) ++bad;
      if (!(engine.reduce(concat(g, h)) == engine.reduce(concat(h, g)))) ++bad;
    }
  }
  return {bad == 0, std::to_string(bad) + " violations over 2 x 200 instances of each axiom"};
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  Outcome (*run)(const AcceptanceOptions&);
};

const Criterion kCriteria[] = {
    {1, "oracle equivalence (fuzz, both modes)", 60, oracle_equivalence},
    {2, "generator-set conformance (integral)", 0, generator_conformance},
    {3, "dyadic conformance", 0, dyadic_conformance},
    {4, "RuleK4 bootstrap", 0, rule_k4_bootstrap},
    {5, "X(Z^2) equation", 1, x_z2_equation},
    {6, "abelian soundness", 30, abelian_soundness},
    {7, "two-bridge pipeline", 0, two_bridge_pipeline},
    {8, "relation harvest", 120, relation_harvest},
    {9, "tangent dimensions at chi_0", 600, tangent_dimensions},
    {10, "algebra axioms", 30, algebra_axioms},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, int only) {
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    CriterionResult r{c.id, c.name, false, 0, c.limit, ""};
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run(options);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = outcome.passed && (c.limit == 0 || r.seconds < c.limit);
    r.detail = outcome.detail;
    while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r, bool with_timing) {
  std::string line = "criterion " + std::to_string(r.id) + ": " + (r.passed ? "PASS" : "FAIL") + "  " + r.name;
  if (with_timing) {
    char timing[64];
    if (r.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, " (%.2fs, limit %.0fs)", r.seconds, r.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, " (%.2fs)", r.seconds);
    line += timing;
  }
  return line + "  " + r.detail;
}

nlohmann::json to_json(const std::vector<CriterionResult>& results) {
  nlohmann::json list = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  return {{"passed", all}, {"criteria", std::move(list)}};
}

}  // namespace skeinlab
