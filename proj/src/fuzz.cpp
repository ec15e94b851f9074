#include "skeinlab/fuzz.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "skeinlab/oracle.hpp"
#include "skeinlab/skein.hpp"

namespace skeinlab {

GroupWord random_word(std::mt19937_64& stream, int rank, int max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  std::uniform_int_distribution<int> budget_dist(1, max_len);
  std::uniform_int_distribution<int> index_dist(1, rank);
  std::uniform_int_distribution<int> coin(0, 1);
  int budget = budget_dist(stream);
  GroupWord w(rank);
  while (budget > 0) {
    std::uniform_int_distribution<int> mag_dist(1, std::min(3, budget));
    const int mag = mag_dist(stream);
    const int index = index_dist(stream);
    w.push_back({index, coin(stream) ? mag : -mag});
    budget -= mag;
  }
  return w;
}

FuzzReport fuzz_check(std::size_t count, int max_rank, int max_len, ReductionMode mode,
                      std::uint64_t seed, unsigned threads) {
  if (count == 0 || max_rank < 1 || max_len < 1)
    throw std::invalid_argument("fuzz parameters must be positive");
  if (threads == 0) threads = 1;

  FuzzReport report;
  report.count = count;
  report.max_rank = max_rank;
  report.max_len = max_len;
  report.mode = mode;
  report.seed = seed;
  if (mode == ReductionMode::dyadic) (void)default_rule_k4();

  std::mutex merge;
  auto worker = [&](unsigned shard) {
    TraceEngine engine(mode);
    std::vector<FuzzFailure> failures;
    std::size_t non_integral = 0;
    for (std::size_t trial = shard; trial < count; trial += threads) {
      auto stream = make_stream(seed, trial);
      std::uniform_int_distribution<int> rank_dist(1, max_rank);
      const int rank = rank_dist(stream);
      const auto rep = Representation::sample(rank, stream);
      const auto w = random_word(stream, rank, max_len);

      const BigInt expected = eval_word(w, rep).trace();
      const TracePoly poly = engine.reduce(w);
      const BigRational got = evaluate(poly, rep.subset_traces(poly.variables()));
      if (!is_integral(got)) ++non_integral;
      if (got != BigRational(expected))
        failures.push_back({trial, format_word(w), rank, to_string(expected), to_string(got)});
    }
    std::lock_guard lock(merge);
    report.failures.insert(report.failures.end(), failures.begin(), failures.end());
    report.non_integral += non_integral;
    report.stats += engine.stats();
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const FuzzFailure& a, const FuzzFailure& b) { return a.trial < b.trial; });
  return report;
}

nlohmann::json to_json(const FuzzReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"trial", f.trial}, {"rank", f.rank}, {"word", f.word},
                        {"expected", f.expected}, {"got", f.got}});
  return {
      {"count", r.count},
      {"max_rank", r.max_rank},
      {"max_len", r.max_len},
      {"mode", to_string(r.mode)},
      {"seed", r.seed},
      {"passed", r.passed()},
      {"failures", std::move(failures)},
      {"non_integral_evaluations", r.non_integral},
      {"rule_stats",
       {{"R1", r.stats.r1}, {"R2", r.stats.r2}, {"R3", r.stats.r3}, {"R4", r.stats.r4},
        {"R5", r.stats.r5}, {"base", r.stats.base}, {"memo_hits", r.stats.memo_hits}}},
  };
}

LaurentCheckReport laurent_character_check(const std::vector<AbelianVector>& vectors,
                                           std::uint64_t seed) {
  LaurentCheckReport report;
  auto stream = make_stream(seed, 0x1a);
  std::uniform_int_distribution<long> num_dist(-9, 9);
  std::uniform_int_distribution<long> den_dist(1, 9);
  for (const auto& v : vectors) {
    ++report.count;
    std::vector<BigRational> lambda;
    for (int i = 0; i < v.rank; ++i) {
      long num = 0;
      while (num == 0) num = num_dist(stream);
      BigRational l(num, den_dist(stream));
      l.canonicalize();
      lambda.push_back(l);
    }
    const SkeinElement x = abelian_from_vector(v);
    const BigRational got = evaluate_in<BigRational>(
        x.poly,
        [&](SubsetVar s) {
          BigRational prod = 1;
          for (int i : s.indices()) prod *= lambda.at(static_cast<std::size_t>(i - 1));
          return BigRational(prod + 1 / prod);
        },
        [](const BigRational& c) { return c; });
    BigRational lv = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i) lv *= pow(lambda[i], v.coords[i]);
    const BigRational expected = lv + 1 / lv;
    if (got != expected) {
      std::string text;
      for (long c : v.coords) text += (text.empty() ? "" : ",") + std::to_string(c);
      report.failures.push_back("v=(" + text + "): expected " + to_string(expected) + ", got " +
                                to_string(got));
    }
  }
  return report;
}

}  // namespace skeinlab
