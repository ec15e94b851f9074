#include "doctest.h"
#include "skeinlab/fuzz.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/oracle.hpp"
#include "skeinlab/trace_engine.hpp"
#include "support.hpp"

using namespace skeinlab;

TEST_CASE("SL2 construction and elementary walks") {
  CHECK(walk_product({{true, 0}, {false, 0}}) == SL2IntMatrix::identity());
  const SL2IntMatrix u = walk_product({{true, 2}});
  CHECK(u == SL2IntMatrix(1, 2, 0, 1));
  CHECK(u.determinant() == 1);
  CHECK_THROWS_AS(SL2IntMatrix(1, 1, 1, 1), std::domain_error);
  CHECK(SL2IntMatrix(2, 1, 1, 1).inverse() == SL2IntMatrix(1, -1, -1, 2));
  CHECK(SL2IntMatrix::upper(1).power(-3) == SL2IntMatrix::upper(-3));
  CHECK(SL2IntMatrix::lower(2).power(0) == SL2IntMatrix::identity());
}

TEST_CASE("eval_word examples") {
  const Representation rep({SL2IntMatrix::upper(1), SL2IntMatrix::lower(1)});
  CHECK(eval_word(GroupWord(2), rep) == SL2IntMatrix::identity());
  CHECK(eval_word(GroupWord(2), rep).trace() == 2);
  const SL2IntMatrix ab = eval_word(parse_word("a b", 2), rep);
  CHECK(ab == SL2IntMatrix(2, 1, 1, 1));
  CHECK(ab.trace() == 3);
  const SL2IntMatrix m(2, 3, 1, 2);
  const Representation r2({m, m});
  CHECK(eval_word(parse_word("a^-1", 2), r2) == SL2IntMatrix(2, -3, -1, 2));
  CHECK_THROWS_AS(eval_word(parse_word("a", 3), rep), std::invalid_argument);
  CHECK(rep.subset_trace(SubsetVar(0b11)) == 3);
}

TEST_CASE("property: sampled matrices have determinant 1 and traces are conjugation invariant") {
  auto g = test::stream(21);
  for (int i = 0; i < 500; ++i) {
    const SL2IntMatrix m = sample_sl2(g), x = sample_sl2(g, 4);
    CHECK(m.determinant() == 1);
    CHECK(m * m.inverse() == SL2IntMatrix::identity());
    CHECK((x * m * x.inverse()).trace() == m.trace());
    // Cayley-Hamilton: tr(M^2) = tr(M)^2 - 2.
    CHECK((m * m).trace() == m.trace() * m.trace() - 2);
  }
}

TEST_CASE("property: eval_word is a homomorphism") {
  auto g = test::stream(22);
  for (int i = 0; i < 300; ++i) {
    const int rank = test::uniform(g, 1, 4);
    const Representation rep = Representation::sample(rank, g);
    const GroupWord u = test::word(g, rank, 6), v = test::word(g, rank, 6);
    CHECK(eval_word(concat(u, v), rep) == eval_word(u, rep) * eval_word(v, rep));
    CHECK(eval_word(invert(u), rep) == eval_word(u, rep).inverse());
  }
}

TEST_CASE("make_stream is deterministic and substreams differ") {
  auto a = make_stream(5, 1), b = make_stream(5, 1), c = make_stream(5, 2);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
}

TEST_CASE("fuzz spot check: a b^-1 a b") {
  auto g = test::stream(23);
  const GroupWord w = parse_word("a b^-1 a b", 2);
  TraceEngine engine(ReductionMode::integral);
  const TracePoly p = engine.reduce(w);
  for (int i = 0; i < 50; ++i) {
    const Representation rep = Representation::sample(2, g);
    CHECK(evaluate(p, rep.subset_traces(p.variables())) == BigRational(eval_word(w, rep).trace()));
  }
}

TEST_CASE("fuzz_check small runs pass and are thread-count independent") {
  for (auto mode : {ReductionMode::integral, ReductionMode::dyadic}) {
    const FuzzReport one = fuzz_check(60, 4, 10, mode, 99, 1);
    const FuzzReport two = fuzz_check(60, 4, 10, mode, 99, 2);
    CHECK(one.passed());
    CHECK(one.count == 60);
    CHECK(to_json(one)["failures"] == to_json(two)["failures"]);
    CHECK(to_json(one)["passed"] == true);
  }
  auto g = test::stream(24);
  for (int i = 0; i < 200; ++i) {
    const GroupWord w = random_word(g, 3, 12);
    CHECK(w.length() <= 12);
    for (std::size_t k = 1; k < w.size(); ++k) CHECK(w.letters()[k].index != w.letters()[k - 1].index);
  }
}

TEST_CASE("laurent character check") {
  const auto e1 = to_laurent(abelian_from_vector(make_abelian_vector({1})));
  CHECK(e1.evaluate({BigRational(3)}) == BigRational(10, 3));
  const auto v11 = to_laurent(abelian_from_vector(make_abelian_vector({1, 1})));
  CHECK(v11.evaluate({BigRational(2), BigRational(3)}) == BigRational(37, 6));

  auto g = test::stream(25);
  std::vector<AbelianVector> vs;
  for (int i = 0; i < 100; ++i) {
    std::vector<long> c(static_cast<std::size_t>(test::uniform(g, 1, 3)));
    for (auto& x : c) x = test::uniform(g, -3, 3);
    vs.push_back(make_abelian_vector(c));
  }
  const auto report = laurent_character_check(vs, 7);
  CHECK(report.count == 100);
  CHECK(report.passed());
}
