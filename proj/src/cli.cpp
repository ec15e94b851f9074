#include "skeinlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skeinlab/acceptance.hpp"
#include "skeinlab/charvar.hpp"
#include "skeinlab/fuzz.hpp"
#include "skeinlab/poly_json.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/trace_engine.hpp"

namespace skeinlab {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

long parse_long(const std::string& text) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not an integer: '" + text + "'");
  return v;
}

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw UsageError("invalid seed '" + text + "'");
  }
  if (used != text.size() || text.front() == '-') throw UsageError("invalid seed '" + text + "'");
  return v;
}

int infer_rank(const std::vector<std::string>& words) {
  int rank = 1;
  for (const auto& text : words) {
    const GroupWord w = parse_word(text, 64);
    for (const auto& l : w.letters()) rank = std::max(rank, l.index);
  }
  return rank;
}

void emit(std::ostream& out, const json& j, bool compact) { out << (compact ? j.dump() : j.dump(2)) << "\n"; }

json stats_json(const RuleStats& s) {
  return {{"R1", s.r1}, {"R2", s.r2}, {"R3", s.r3}, {"R4", s.r4},
          {"R5", s.r5}, {"base", s.base}, {"memo_hits", s.memo_hits}};
}

json element_json(const SkeinElement& x) {
  json j = {{"rank", x.rank}, {"mode", to_string(x.mode)},
            {"group", x.kind == GroupKind::abelian ? "abelian" : "free"},
            {"poly", to_json(x.poly)}, {"pretty", to_string(x)}};
  if (x.kind == GroupKind::abelian) j["laurent"] = to_json(to_laurent(x));
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skein algebras of groups at A = -1: exact trace reduction and character varieties",
               "skeinlab"};
  app.require_subcommand(1);

  std::string seed_text;
  std::vector<CLI::Option*> seed_opts;
  bool compact = false;
  auto add_common = [&](CLI::App* sub, bool seeded) {
    sub->add_flag("--json", compact, "machine-readable output (compact JSON)");
    if (seeded) seed_opts.push_back(sub->add_option("--seed", seed_text, "RNG seed (default: $SKEINLAB_SEED or 0)"));
  };
  const auto mode_check = CLI::IsMember({"integral", "dyadic"});

  // reduce
  auto* reduce = app.add_subcommand("reduce", "canonical trace polynomial of a word in F_n");
  std::string reduce_word;
  int reduce_rank = 0;
  std::string reduce_mode = "integral";
  bool reduce_stats = false;
  reduce->add_option("word", reduce_word, "word such as \"a b^-1 c^2\" or \"g1 g5^-1\"")->required();
  auto* reduce_rank_opt = reduce->add_option("--rank", reduce_rank, "rank n of F_n (default: largest generator used)")
      ->check(CLI::Range(1, 64));
  reduce->add_option("--mode", reduce_mode, "integral or dyadic")->check(mode_check);
  reduce->add_flag("--stats", reduce_stats, "report rule usage");
  add_common(reduce, false);

  // multiply
  auto* mult = app.add_subcommand("multiply", "product of [w1] [w2] ... in S(F_n)");
  std::vector<std::string> mult_words;
  int mult_rank = 0;
  std::string mult_mode = "integral";
  mult->add_option("words", mult_words, "words to multiply")->required()->expected(1, -1);
  auto* mult_rank_opt = mult->add_option("--rank", mult_rank, "rank n of F_n")->check(CLI::Range(1, 64));
  mult->add_option("--mode", mult_mode, "integral or dyadic")->check(mode_check);
  add_common(mult, false);

  // abelian
  auto* abel = app.add_subcommand("abelian", "canonical form of [v] in S(Z^n)");
  std::string abel_vector;
  int abel_rank = 0;
  std::string abel_mode = "dyadic";
  abel->add_option("--vector", abel_vector, "comma-separated coordinates, e.g. 1,-1,2")->required();
  auto* abel_rank_opt = abel->add_option("--rank", abel_rank, "n; must match the vector length")->check(CLI::Range(1, 64));
  abel->add_option("--mode", abel_mode, "dyadic (u, v generators) or integral")->check(mode_check);
  add_common(abel, false);

  // two-bridge
  auto* tb = app.add_subcommand("two-bridge", "character polynomial of a 2-bridge knot group");
  std::string tb_knot, tb_eps;
  auto* knot_opt = tb->add_option("--knot", tb_knot, "preset: trefoil or fig8")
                       ->check(CLI::IsMember({"trefoil", "fig8"}));
  auto* eps_opt = tb->add_option("--epsilons", tb_eps, "comma-separated +1/-1 vector");
  knot_opt->excludes(eps_opt);
  add_common(tb, false);

  // harvest
  auto* hv = app.add_subcommand("harvest", "relations among canonical generators by exact sampling");
  std::string hv_group, hv_samples = "auto", hv_out;
  unsigned hv_degree = 0;
  hv->add_option("--group", hv_group, "free:N or abelian:N")->required();
  hv->add_option("--degree", hv_degree, "total degree bound")->required()->check(CLI::Range(1, 12));
  hv->add_option("--samples", hv_samples, "auto or a count >= 2 x #monomials");
  hv->add_option("--out", hv_out, "also write the basis to this file");
  add_common(hv, true);

  // tangent
  auto* tg = app.add_subcommand("tangent", "tangent dimension at the trivial character");
  std::string tg_from;
  tg->add_option("--from", tg_from, "relation basis JSON written by harvest ('-' for stdin)")->required();
  add_common(tg, false);

  // fuzz
  auto* fz = app.add_subcommand("fuzz", "engine vs SL2(Z) oracle on random words");
  std::size_t fz_count = 1000;
  int fz_rank = 4, fz_len = 12;
  unsigned fz_threads = 1;
  std::string fz_mode = "integral";
  fz->add_option("--count", fz_count, "number of trials")->check(CLI::PositiveNumber);
  fz->add_option("--max-rank", fz_rank, "largest rank sampled")->check(CLI::Range(1, 64));
  fz->add_option("--max-len", fz_len, "largest word length (sum of |exponents|)")->check(CLI::PositiveNumber);
  fz->add_option("--mode", fz_mode, "integral or dyadic")->check(mode_check);
  fz->add_option("--threads", fz_threads, "worker threads")->check(CLI::Range(1, 256));
  add_common(fz, true);

  // selftest
  auto* st = app.add_subcommand("selftest", "run the acceptance criteria");
  bool st_quick = false, st_timings = false;
  int st_only = 0;
  st->add_flag("--quick", st_quick, "cap fuzz counts at 100");
  st->add_flag("--timings", st_timings, "append wall-clock timings to each line");
  st->add_option("--criterion", st_only, "run a single criterion")->check(CLI::Range(1, 10));
  add_common(st, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::uint64_t seed = 0;
    bool seed_given = false;
    for (auto* o : seed_opts) seed_given = seed_given || o->count() > 0;
    if (seed_given) seed = parse_seed(seed_text);
    else if (const char* env = std::getenv("SKEINLAB_SEED")) seed = parse_seed(env);

    if (*reduce) {
      const int rank = reduce_rank_opt->count() ? reduce_rank : infer_rank({reduce_word});
      const GroupWord w = parse_word(reduce_word, rank);
      TraceEngine engine(parse_mode(reduce_mode));
      const SkeinElement x = from_word(engine, w);
      if (compact) {
        json j = element_json(x);
        j["word"] = format_word(w);
        if (reduce_stats) j["stats"] = stats_json(engine.stats());
        emit(out, j, true);
      } else {
        out << to_string(x) << "\n";
        if (reduce_stats) out << stats_json(engine.stats()).dump() << "\n";
      }
      return kExitOk;
    }

    if (*mult) {
      const int rank = mult_rank_opt->count() ? mult_rank : infer_rank(mult_words);
      TraceEngine engine(parse_mode(mult_mode));
      SkeinElement product = skein_constant(rank, engine.mode(), GroupKind::free_group, 1);
      for (const auto& text : mult_words) product = multiply(product, from_word(engine, parse_word(text, rank)));
      if (compact) emit(out, element_json(product), true);
      else out << to_string(product) << "\n";
      return kExitOk;
    }

    if (*abel) {
      std::vector<long> coords;
      for (const auto& c : split(abel_vector, ',')) coords.push_back(parse_long(c));
      if (coords.empty()) throw UsageError("empty vector");
      if (abel_rank_opt->count() && abel_rank != static_cast<int>(coords.size()))
        throw UsageError("--rank does not match the vector length");
      const SkeinElement x = abelian_from_vector(make_abelian_vector(coords), parse_mode(abel_mode));
      if (compact) emit(out, element_json(x), true);
      else out << to_string(x) << "\n";
      return kExitOk;
    }

    if (*tb) {
      TwoBridgePresentation p;
      if (!tb_knot.empty()) {
        p = two_bridge_preset(tb_knot);
      } else if (!tb_eps.empty()) {
        for (const auto& e : split(tb_eps, ',')) p.epsilons.push_back(static_cast<int>(parse_long(e)));
        two_bridge_word(p);  // validates
      } else {
        throw UsageError("two-bridge needs --knot or --epsilons");
      }
      CharVarResult r;
      try {
        r = two_bridge_charpoly(p);
      } catch (const NonExactDivision& e) {
        err << "skeinlab: " << e.what() << "\n";
        return kExitCheckFailed;
      }
      json j = to_json(r);
      j["epsilons"] = p.epsilons;
      j["word"] = format_word(two_bridge_word(p));
      const RileyReport riley = riley_cross_check(p, r);
      j["riley_check"] = {{"points", riley.points},
                          {"relation_holds", riley.relation_holds},
                          {"nonabelian", riley.nonabelian},
                          {"controls", riley.controls},
                          {"controls_rejected", riley.controls_rejected},
                          {"skipped", riley.skipped}};
      emit(out, j, compact);
      return kExitOk;
    }

    if (*hv) {
      const GroupSpec g = parse_group_spec(hv_group);
      std::size_t samples = 0;
      if (hv_samples != "auto") {
        const long n = parse_long(hv_samples);
        if (n <= 0) throw UsageError("--samples must be positive or auto");
        samples = static_cast<std::size_t>(n);
        const std::size_t needed = 2 * monomials_up_to(harvest_generators(g), hv_degree).size();
        if (samples < needed)
          throw UsageError("--samples " + hv_samples + " is below 2 x #monomials = " + std::to_string(needed));
      }
      const RelationBasis b = harvest_relations(g, hv_degree, samples, seed);
      const json j = to_json(b);
      if (!hv_out.empty()) {
        std::ofstream file(hv_out);
        if (!file) throw UsageError("cannot write " + hv_out);
        file << j.dump(2) << "\n";
      }
      emit(out, j, compact);
      return kExitOk;
    }

    if (*tg) {
      json j;
      try {
        if (tg_from == "-") {
          j = json::parse(std::cin);
        } else {
          std::ifstream file(tg_from);
          if (!file) throw UsageError("cannot read " + tg_from);
          j = json::parse(file);
        }
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
      }
      const RelationBasis b = relation_basis_from_json(j);
      const std::size_t bad = verify_relations(b, 50, b.seed);
      json report = to_json(tangent_dim_at_trivial(b));
      report["group"] = to_string(b.group);
      report["relations"] = b.relations.size();
      report["fresh_verification"] = {{"samples", 50}, {"failures", bad}};
      emit(out, report, compact);
      if (bad != 0) {
        err << "skeinlab: " << bad << " relation evaluations did not vanish on fresh samples\n";
        return kExitCheckFailed;
      }
      return kExitOk;
    }

    if (*fz) {
      const FuzzReport r = fuzz_check(fz_count, fz_rank, fz_len, parse_mode(fz_mode), seed, fz_threads);
      emit(out, to_json(r), compact);
      return r.passed() ? kExitOk : kExitCheckFailed;
    }

    if (*st) {
      const auto results = run_acceptance({st_quick, seed}, st_only);
      bool all = true;
      for (const auto& r : results) all = all && r.passed;
      if (compact) {
        emit(out, to_json(results), true);
      } else {
        for (const auto& r : results) out << format_line(r, st_timings) << "\n";
        out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
      }
      return all ? kExitOk : kExitCheckFailed;
    }
  } catch (const HarvestError& e) {
    err << "skeinlab: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "skeinlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "skeinlab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace skeinlab
