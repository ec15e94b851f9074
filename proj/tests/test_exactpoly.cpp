#include "doctest.h"
#include "skeinlab/bivariate.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/linalg.hpp"
#include "skeinlab/poly.hpp"
#include "skeinlab/poly_json.hpp"
#include "support.hpp"

using namespace skeinlab;

namespace {

const SubsetVar t1(0b1), t2(0b10), t12(0b11), t3(0b100);

TracePoly T(SubsetVar v) { return TracePoly::variable(v); }
TracePoly C(long c) { return TracePoly::constant(c); }
BigRational Q(long n, long d = 1) {
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("-6/4") == Q(-3, 2));
  CHECK(parse_rational("-6/4").get_den() == 2);
  CHECK(parse_rational("0/5").get_den() == 1);
  CHECK(to_string(Q(3, -6)) == "-1/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(is_dyadic(Q(3, 8)));
  CHECK(is_dyadic(Q(5)));
  CHECK(!is_dyadic(Q(1, 6)));
  CHECK(is_integral(Q(4, 2)));
  CHECK(pow(Q(2, 3), -2) == Q(9, 4));
}

TEST_CASE("subset variable order: cardinality, then lexicographic") {
  CHECK(t1 < t2);
  CHECK(t3 < t12);
  CHECK(SubsetVar::of({1, 3}) < SubsetVar::of({2, 3}));
  CHECK(SubsetVar::of({1, 2}) < SubsetVar::of({1, 3}));
  CHECK(SubsetVar::of({2, 3}) < SubsetVar::of({1, 2, 3}));
  CHECK_THROWS(SubsetVar::of({0}));
}

TEST_CASE("poly arithmetic examples") {
  CHECK((T(t1) + (-T(t1))).is_zero());
  CHECK(T(t1) * T(t2) == TracePoly::term(1, Monomial({{t1, 1}, {t2, 1}})));
  CHECK((T(t1) + C(2)) * (T(t1) - C(2)) == T(t1) * T(t1) - C(4));
  CHECK(poly_arith(T(t1), T(t2), ArithOp::sub) == T(t1) - T(t2));
  CHECK(to_string(T(t1) * T(t2) - T(t12)) == "t1*t2 - t[1,2]");
  CHECK(to_string(T(t1) * T(t1) - T(t1) * T(t2) + T(t2) * T(t2)) == "t1^2 - t1*t2 + t2^2");
  CHECK(to_string(TracePoly()) == "0");
  CHECK(to_string(T(t12) * Q(-3, 2) + C(1)) == "-3/2*t[1,2] + 1");
  CHECK(to_string(T(SubsetVar::of({1, 2, 3})), VarStyle::abelian) == "w[1,2,3]");
  CHECK(to_string(T(t1) + T(t12), VarStyle::abelian) == "u1 + v[1,2]");
}

TEST_CASE("poly_divide examples") {
  const TracePoly d = T(t1) * T(t1) - T(t12) - C(2);
  auto r = poly_divide(d, d, {t12, t1});
  CHECK(r.quotient == C(1));
  CHECK(r.remainder.is_zero());
  r = poly_divide(d * (T(t12) - C(1)), d, {t12, t1});
  CHECK(r.quotient == T(t12) - C(1));
  CHECK(r.remainder.is_zero());
  r = poly_divide(T(t2), d, {t12, t1});
  CHECK(!r.remainder.is_zero());
  CHECK_THROWS(poly_divide(T(t1), TracePoly(), {t1}));
}

TEST_CASE("evaluate examples") {
  const TracePoly d = T(t1) * T(t1) - T(t2) - C(2);
  CHECK(evaluate(d, {{t1, 2}, {t2, 2}}) == 0);
  CHECK(evaluate(C(2), {}) == 2);
  CHECK(evaluate(T(t1) * T(t2), {{t1, 3}, {t2, Q(5, 2)}}) == Q(15, 2));
  CHECK_THROWS_AS(evaluate(T(t1), {}), std::out_of_range);
}

TEST_CASE("derivative and substitute") {
  const TracePoly p = T(t1) * T(t1) * T(t2) + Q(1, 2) * T(t2);
  CHECK(p.derivative(t1) == C(2) * T(t1) * T(t2));
  CHECK(p.derivative(t12).is_zero());
  const TracePoly s = p.substitute([](SubsetVar v) -> std::optional<TracePoly> {
    if (v == t2) return T(t1) + C(1);
    return std::nullopt;
  });
  CHECK(s == T(t1) * T(t1) * (T(t1) + C(1)) + Q(1, 2) * (T(t1) + C(1)));
  CHECK(p.total_degree() == 3);
  CHECK(p.variables() == std::vector<SubsetVar>{t1, t2});
}

TEST_CASE("laurent examples") {
  const LaurentPoly a = symmetric_monomial({1, 0}), b = symmetric_monomial({0, 1});
  LaurentPoly expect(2);
  for (int i : {1, -1})
    for (int j : {1, -1}) expect.add_term(1, {i, j});
  CHECK(a * b == expect);
  const LaurentPoly x = LaurentPoly::monomial({1}), xi = LaurentPoly::monomial({-1});
  const LaurentPoly sq = (x - xi) * (x - xi);
  CHECK(sq == LaurentPoly::monomial({2}) - LaurentPoly::constant(1, 2) + LaurentPoly::monomial({-2}));
  CHECK(a + LaurentPoly(2) == a);
  CHECK(is_symmetric(x + xi));
  CHECK(!is_symmetric(x - xi));
  CHECK(is_symmetric(symmetric_monomial({1, 1})));
  CHECK_THROWS(a + LaurentPoly(3));
  CHECK(a.evaluate({Q(3), Q(7)}) == Q(10, 3));
}

TEST_CASE("json round trip") {
  auto g = test::stream(11);
  for (int i = 0; i < 50; ++i) {
    const TracePoly p = test::poly(g, 3, 6, 4);
    CHECK(trace_poly_from_json(to_json(p)) == p);
    CHECK(trace_poly_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
    const LaurentPoly l = test::laurent(g, 2, 5);
    CHECK(laurent_poly_from_json(to_json(l)) == l);
  }
  CHECK(to_json(T(t12) * Q(-3, 2)).dump() ==
        R"({"terms":[{"coeff":"-3/2","monomial":[{"power":1,"subset":[1,2]}]}]})");
  CHECK_THROWS(trace_poly_from_json(nlohmann::json::parse(R"({"terms":[{"coeff":"x","monomial":[]}]})")));
}

TEST_CASE("property: ring axioms for TracePoly, checked directly and by evaluation") {
  auto g = test::stream(12);
  const std::vector<SubsetVar> vars = {t1, t2, t12, t3, SubsetVar(0b101), SubsetVar(0b110), SubsetVar(0b111)};
  for (int i = 0; i < 200; ++i) {
    const TracePoly a = test::poly(g, 3, 5, 3), b = test::poly(g, 3, 5, 3), c = test::poly(g, 3, 5, 3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b - b == a);
    const Assignment at = test::point(g, vars);
    CHECK(evaluate(a * b + c, at) == evaluate(a, at) * evaluate(b, at) + evaluate(c, at));
    const TracePoly ab = a * b;
    for (const auto& [m, coeff] : ab.terms()) CHECK(coeff != 0);
  }
}

TEST_CASE("property: ring axioms for LaurentPoly and tau-symmetrization") {
  auto g = test::stream(13);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = test::laurent(g, 2, 4), b = test::laurent(g, 2, 4), c = test::laurent(g, 2, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(is_symmetric(a + a.tau()));
    CHECK(a.tau().tau() == a);
  }
}

TEST_CASE("property: poly_divide gives p = q d + r") {
  auto g = test::stream(14);
  for (int i = 0; i < 200; ++i) {
    const TracePoly p = test::poly(g, 2, 6, 4);
    TracePoly d = test::poly(g, 2, 3, 2);
    if (d.is_zero()) d = C(1);
    const auto r = poly_divide(p, d, {t12, t1, t2});
    CHECK(r.quotient * d + r.remainder == p);
  }
}

TEST_CASE("exact linear algebra") {
  RationalMatrix m{{Q(1), Q(2)}, {Q(3), Q(4)}};
  const auto s = solve(m, {Q(5), Q(6)});
  REQUIRE(s.status == SolveStatus::unique);
  CHECK(s.x == std::vector<BigRational>{Q(-4), Q(9, 2)});
  CHECK(solve({{Q(1), Q(1)}, {Q(1), Q(1)}}, {Q(1), Q(2)}).status == SolveStatus::inconsistent);
  CHECK(solve({{Q(1), Q(1)}}, {Q(1)}).status == SolveStatus::underdetermined);
  CHECK(rank({{Q(1), Q(2)}, {Q(2), Q(4)}}) == 1);

  const std::uint64_t p = modp::kPrimary;
  CHECK(modp::mul(modp::inverse(12345, p), 12345, p) == 1);
  CHECK(modp::reconstruct(modp::reduce(Q(-7, 13), p), p) == Q(-7, 13));
  // Kernel of [1 2 3] has dimension 2, one vector per free column.
  const auto ns = modp::nullspace({{1, 2, 3}}, 3, p);
  REQUIRE(ns.size() == 2);
  CHECK(ns[0][1] == 1);
  CHECK(ns[0][0] == p - 2);
}

TEST_CASE("bivariate gcd and square-freeness") {
  const TracePoly x = T(t1), y = T(t12);
  const TracePoly f = x * x - y - C(2), g = y - C(1), h = x * y + C(3);
  CHECK(bivariate_gcd(f * g, g * h, t1, t12) == g);
  CHECK(bivariate_gcd(f * g * Q(3, 2), f * h * C(-4), t1, t12) == f);
  CHECK(bivariate_gcd(f, g, t1, t12) == C(1));
  CHECK(is_square_free(f * g, t1, t12));
  CHECK(!is_square_free(f * g * g, t1, t12));
  CHECK(!is_square_free((x - C(1)) * (x - C(1)) * y, t1, t12));
  CHECK(is_square_free(C(5), t1, t12));
  CHECK(!is_square_free(TracePoly(), t1, t12));
  CHECK_THROWS_AS(bivariate_gcd(T(t3), x, t1, t12), std::invalid_argument);
  CHECK(primitive_normalize(Q(-2, 3) * x + TracePoly::constant(Q(4, 9))) == C(3) * x - C(2));
}
