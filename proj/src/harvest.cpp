#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "skeinlab/bivariate.hpp"
#include "skeinlab/charvar.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/linalg.hpp"
#include "skeinlab/oracle.hpp"
#include "skeinlab/poly_json.hpp"
#include "skeinlab/trace_engine.hpp"

namespace skeinlab {

namespace {

// Substreams at and above this offset hold held-out samples.
constexpr std::uint64_t kFreshOffset = std::uint64_t{1} << 40;
constexpr std::size_t kFreshSamples = 50;

// Flipping the sign of the i-th generator's image preserves the relation
// ideal and multiplies t_S by -1 when i is in S, so relations split by the
// parity of each index.
std::uint64_t parity_class(const Monomial& m) {
  std::uint64_t cls = 0;
  for (const auto& f : m.factors())
    if (f.power % 2 == 1) cls ^= f.var.mask();
  return cls;
}

// Evaluates a fixed set of relations; coefficients are scaled to integers.
class RelationEvaluator {
 public:
  RelationEvaluator(const std::vector<SubsetVar>& generators, const std::vector<TracePoly>& relations)
      : generators_(generators) {
    std::map<Monomial, std::size_t, GrlexLess> index;
    for (const auto& r : relations) {
      BigInt den = 1;
      for (const auto& [m, c] : r.terms()) den = lcm(den, BigInt(c.get_den()));
      std::vector<std::pair<std::size_t, BigInt>> terms;
      for (const auto& [m, c] : r.terms()) {
        auto [it, fresh] = index.emplace(m, monomials_.size());
        if (fresh) monomials_.push_back(factor_positions(m));
        terms.emplace_back(it->second, BigInt(c * den));
      }
      relations_.push_back(std::move(terms));
    }
  }

  // Number of relations that do not vanish at `values`.
  std::size_t failures(const Assignment& values) const {
    bool integral = true;
    for (const auto& [v, x] : values) integral = integral && is_integral(x);
    return integral ? failures_in<BigInt>(values, [](const BigRational& x) { return BigInt(x.get_num()); })
                    : failures_in<BigRational>(values, [](const BigRational& x) { return x; });
  }

 private:
  std::vector<std::pair<std::size_t, unsigned>> factor_positions(const Monomial& m) const {
    std::vector<std::pair<std::size_t, unsigned>> out;
    for (const auto& f : m.factors()) {
      auto it = std::find(generators_.begin(), generators_.end(), f.var);
      if (it == generators_.end())
        throw std::invalid_argument("relation uses " + var_name(f.var) + ", not a generator");
      out.emplace_back(static_cast<std::size_t>(it - generators_.begin()), f.power);
    }
    return out;
  }

  template <class T, class Convert>
  std::size_t failures_in(const Assignment& values, Convert convert) const {
    std::vector<T> gens;
    for (SubsetVar g : generators_) gens.push_back(convert(values.at(g)));
    std::vector<T> mono;
    mono.reserve(monomials_.size());
    for (const auto& fs : monomials_) {
      T x = 1;
      for (const auto& [pos, power] : fs)
        for (unsigned k = 0; k < power; ++k) x *= gens[pos];
      mono.push_back(std::move(x));
    }
    std::size_t bad = 0;
    for (const auto& r : relations_) {
      T sum = 0;
      for (const auto& [pos, c] : r) sum += T(c) * mono[pos];
      if (sum != 0) ++bad;
    }
    return bad;
  }

  std::vector<SubsetVar> generators_;
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> monomials_;
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> relations_;
};

std::optional<std::vector<TracePoly>> modular_relations(
    const std::vector<Monomial>& monos, const std::vector<Assignment>& samples, std::uint64_t p) {
  std::map<std::uint64_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < monos.size(); ++i) classes[parity_class(monos[i])].push_back(i);

  std::vector<TracePoly> out;
  for (const auto& [cls, cols] : classes) {
    // Twice the column count bounds the modular work; every sample still
    // takes part in the exact verification afterwards.
    const std::size_t rows = std::min(samples.size(), 2 * cols.size() + 16);
    modp::Matrix m;
    for (std::size_t s = 0; s < rows; ++s) {
      std::map<SubsetVar, std::uint64_t> reduced;
      for (const auto& [v, x] : samples[s]) reduced[v] = modp::reduce(x, p);
      std::vector<std::uint64_t> row;
      for (std::size_t c : cols) {
        std::uint64_t x = 1;
        for (const auto& f : monos[c].factors())
          for (unsigned k = 0; k < f.power; ++k) x = modp::mul(x, reduced.at(f.var), p);
        row.push_back(x);
      }
      m.push_back(std::move(row));
    }
    for (const auto& vec : modp::nullspace(std::move(m), cols.size(), p)) {
      TracePoly rel;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (vec[j] == 0) continue;
        auto q = modp::reconstruct(vec[j], p);
        if (!q) return std::nullopt;
        rel.add_term(*q, monos[cols[j]]);
      }
      out.push_back(primitive_normalize(rel));
    }
  }
  std::sort(out.begin(), out.end(), [](const TracePoly& a, const TracePoly& b) {
    return grlex_less(a.terms().rbegin()->first, b.terms().rbegin()->first);
  });
  return out;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("group spec must look like free:3 or abelian:2");
  const std::string kind = text.substr(0, colon);
  GroupSpec g;
  if (kind == "free") g.kind = GroupKind::free_group;
  else if (kind == "abelian") g.kind = GroupKind::abelian;
  else throw std::invalid_argument("unknown group kind '" + kind + "'");
  std::size_t used = 0;
  try {
    g.n = std::stoi(text.substr(colon + 1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("group rank must be an integer");
  }
  if (used != text.size() - colon - 1 || g.n < 1 || g.n > 63)
    throw std::invalid_argument("group rank must be an integer in [1, 63]");
  return g;
}

std::string to_string(const GroupSpec& g) {
  return (g.kind == GroupKind::free_group ? "free:" : "abelian:") + std::to_string(g.n);
}

std::vector<SubsetVar> harvest_generators(const GroupSpec& g) {
  std::vector<SubsetVar> out;
  for (SubsetVar v : skein_basis_vars(g.n, ReductionMode::dyadic))
    if (g.kind == GroupKind::free_group || v.size() <= 2) out.push_back(v);
  return out;
}

std::vector<Monomial> monomials_up_to(const std::vector<SubsetVar>& vars, unsigned degree) {
  std::vector<Monomial> out;
  std::vector<Factor> current;
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == vars.size()) {
      out.emplace_back(current);
      return;
    }
    self(self, i + 1, left);
    for (unsigned e = 1; e <= left; ++e) {
      current.push_back({vars[i], e});
      self(self, i + 1, left - e);
      current.pop_back();
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

Assignment sample_generator_values(const GroupSpec& g, std::mt19937_64& stream) {
  const auto gens = harvest_generators(g);
  if (g.kind == GroupKind::free_group) return Representation::sample(g.n, stream).subset_traces(gens);

  std::uniform_int_distribution<long> mag(1, 16);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<BigRational> lambda;
  for (int i = 0; i < g.n; ++i) {
    const long num = mag(stream);
    BigRational l(num, mag(stream));
    l.canonicalize();
    if (coin(stream)) l = -l;
    lambda.push_back(l);
  }
  Assignment out;
  for (SubsetVar v : gens) {
    BigRational prod = 1;
    for (int i : v.indices()) prod *= lambda[static_cast<std::size_t>(i - 1)];
    out[v] = prod + 1 / prod;
  }
  return out;
}

RelationBasis harvest_relations(const GroupSpec& g, unsigned degree_bound, std::size_t sample_count,
                                std::uint64_t seed) {
  RelationBasis basis;
  basis.group = g;
  basis.degree_bound = degree_bound;
  basis.generators = harvest_generators(g);
  basis.seed = seed;
  const auto monos = monomials_up_to(basis.generators, degree_bound);
  if (sample_count == 0) sample_count = 2 * monos.size() + 16;
  if (sample_count < 2 * monos.size())
    throw HarvestError("need at least " + std::to_string(2 * monos.size()) + " samples for " +
                       std::to_string(monos.size()) + " monomials, got " + std::to_string(sample_count));
  basis.samples = sample_count;

  std::vector<Assignment> samples;
  for (std::size_t s = 0; s < sample_count; ++s) {
    auto stream = make_stream(seed, s);
    samples.push_back(sample_generator_values(g, stream));
  }

  for (std::uint64_t p : {modp::kPrimary, modp::kSecondary}) {
    std::optional<std::vector<TracePoly>> rels;
    try {
      rels = modular_relations(monos, samples, p);
    } catch (const std::domain_error&) {
      continue;  // a sample value has a denominator divisible by p
    }
    if (!rels) continue;
    const RelationEvaluator check(basis.generators, *rels);
    bool ok = true;
    for (const auto& s : samples)
      if (check.failures(s) != 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    basis.relations = std::move(*rels);
    basis.prime = p;
    if (verify_relations(basis, kFreshSamples, seed) != 0) continue;
    return basis;
  }
  throw HarvestError("no prime produced relations that verify exactly over Q");
}

std::size_t verify_relations(const RelationBasis& b, std::size_t count, std::uint64_t seed) {
  const RelationEvaluator check(b.generators, b.relations);
  std::size_t bad = 0;
  for (std::size_t s = 0; s < count; ++s) {
    auto stream = make_stream(seed, kFreshOffset + s);
    bad += check.failures(sample_generator_values(b.group, stream));
  }
  return bad;
}

nlohmann::json to_json(const RelationBasis& b) {
  const VarStyle style = b.group.kind == GroupKind::abelian ? VarStyle::abelian : VarStyle::trace;
  nlohmann::json gens = nlohmann::json::array(), rels = nlohmann::json::array(),
                 pretty = nlohmann::json::array();
  for (SubsetVar v : b.generators) gens.push_back(to_json(v));
  for (const auto& r : b.relations) {
    rels.push_back(to_json(r));
    pretty.push_back(to_string(r, style));
  }
  return {
      {"group", to_string(b.group)},
      {"degree_bound", b.degree_bound},
      {"samples", b.samples},
      {"seed", b.seed},
      {"prime", b.prime},
      {"generators", std::move(gens)},
      {"relations", std::move(rels)},
      {"relations_pretty", std::move(pretty)},
  };
}

RelationBasis relation_basis_from_json(const nlohmann::json& j) {
  RelationBasis b;
  try {
    b.group = parse_group_spec(j.at("group").get<std::string>());
    b.degree_bound = j.at("degree_bound").get<unsigned>();
    b.samples = j.value("samples", std::size_t{0});
    b.seed = j.value("seed", std::uint64_t{0});
    b.prime = j.value("prime", std::uint64_t{0});
    if (j.contains("generators")) {
      for (const auto& g : j.at("generators")) b.generators.push_back(SubsetVar::of(g.get<std::vector<int>>()));
    } else {
      b.generators = harvest_generators(b.group);
    }
    for (const auto& r : j.at("relations")) b.relations.push_back(trace_poly_from_json(r));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed relation basis: ") + e.what());
  }
  return b;
}

TangentReport tangent_dim_at_trivial(const RelationBasis& b) {
  Assignment chi0;
  for (SubsetVar g : b.generators) chi0[g] = 2;
  RationalMatrix jac;
  TangentReport t;
  for (const auto& r : b.relations) {
    std::vector<BigRational> row;
    for (SubsetVar g : b.generators) {
      row.push_back(evaluate(r.derivative(g), chi0));
      if (row.back() != 0) t.gradients_vanish = false;
    }
    jac.push_back(std::move(row));
  }
  t.ambient_dim = b.generators.size();
  t.jacobian_rank_at_chi0 = jac.empty() ? 0 : rank(jac);
  t.tangent_dim = t.ambient_dim - t.jacobian_rank_at_chi0;
  return t;
}

nlohmann::json to_json(const TangentReport& t) {
  return {
      {"ambient_dim", t.ambient_dim},
      {"jacobian_rank_at_chi0", t.jacobian_rank_at_chi0},
      {"tangent_dim", t.tangent_dim},
      {"gradients_vanish", t.gradients_vanish},
  };
}

bool check_x_z2_identity(long constant_term, bool other_pairing) {
  const LaurentPoly a1 = symmetric_monomial({1, 0});
  const LaurentPoly a2 = symmetric_monomial({0, 1});
  const LaurentPoly b = symmetric_monomial({1, other_pairing ? -1 : 1});
  const LaurentPoly p = a1 * a1 + a2 * a2 + b * b - a1 * a2 * b +
                        LaurentPoly::constant(2, BigRational(constant_term));
  return p.is_zero();
}

}  // namespace skeinlab
