#include <array>

#include "doctest.h"
#include "skeinlab/charvar.hpp"
#include "skeinlab/poly_json.hpp"
#include "support.hpp"

using namespace skeinlab;

namespace {

const SubsetVar t1(0b1), t12(0b11);

TracePoly T(SubsetVar v) { return TracePoly::variable(v); }
TracePoly C(const BigRational& c) { return TracePoly::constant(c); }

// 2x2 matrices over Q[y], y = t[1,2].
using Mat = std::array<TracePoly, 4>;

Mat mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

// Riley's normal form at eigenvalue l: a = [[l,1],[0,1/l]], b = [[l,0],[-c,1/l]]
// with c = l^2 + l^-2 - y, so that tr a = tr b = l + 1/l and tr ab = y.
std::pair<Mat, Mat> riley(const BigRational& l) {
  const BigRational li = 1 / l;
  const TracePoly c = C(l * l + li * li) - T(t12);
  return {Mat{C(l), C(1), C(0), C(li)}, Mat{C(l), C(0), -c, C(li)}};
}

Mat eval_riley(const GroupWord& w, const Mat& a, const Mat& b) {
  const Mat ai{a[3], -a[1], -a[2], a[0]}, bi{b[3], -b[1], -b[2], b[0]};
  Mat out{C(1), C(0), C(0), C(1)};
  for (const auto& l : w.letters()) {
    const Mat& g = l.index == 1 ? (l.exponent > 0 ? a : ai) : (l.exponent > 0 ? b : bi);
    for (int k = 0; k < std::abs(l.exponent); ++k) out = mul(out, g);
  }
  return out;
}

// Every entry of wa - bw lies in the ideal of Phi(l + 1/l, y) in Q[y].
bool riley_divisible(const TwoBridgePresentation& p, const TracePoly& phi, const BigRational& l) {
  const auto [a, b] = riley(l);
  const GroupWord w = two_bridge_word(p);
  const Mat wm = eval_riley(w, a, b);
  const Mat lhs = mul(wm, a), rhs = mul(b, wm);
  const TracePoly phil = phi.substitute([&](SubsetVar v) -> std::optional<TracePoly> {
    if (v == t1) return C(l + 1 / l);
    return std::nullopt;
  });
  if (phil.is_constant()) return false;
  for (int k = 0; k < 4; ++k)
    if (!poly_divide(lhs[k] - rhs[k], phil, {t12}).remainder.is_zero()) return false;
  return true;
}

TracePoly on_abelian_line(const TracePoly& q) {
  return q.substitute([](SubsetVar v) -> std::optional<TracePoly> {
    if (v == t12) return T(t1) * T(t1) - C(2);
    return std::nullopt;
  });
}

TwoBridgePresentation random_presentation(std::mt19937_64& g, int max_len) {
  TwoBridgePresentation p;
  const int n = test::uniform(g, 1, max_len);
  for (int i = 0; i < n; ++i) p.epsilons.push_back(test::uniform(g, 0, 1) ? 1 : -1);
  return p;
}

}  // namespace

TEST_CASE("two-bridge words and presets") {
  CHECK(format_word(two_bridge_word(two_bridge_preset("trefoil"))) == "a b");
  CHECK(format_word(two_bridge_word(two_bridge_preset("fig8"))) == "a b^-1 a^-1 b");
  CHECK(format_word(two_bridge_word({{1, 1, -1}})) == "a b^-1 a b a^-1 b");
  CHECK_THROWS_AS(two_bridge_preset("unknot"), std::invalid_argument);
  CHECK_THROWS_AS(two_bridge_word({{}}), std::invalid_argument);
  CHECK_THROWS_AS(two_bridge_word({{1, 2}}), std::invalid_argument);
  CHECK(abelian_factor() == T(t1) * T(t1) - T(t12) - C(2));
}

TEST_CASE("trefoil") {
  const auto p = two_bridge_preset("trefoil");
  const CharVarResult r = two_bridge_charpoly(p);
  CHECK(!r.q.is_zero());
  CHECK(poly_divide(r.q, abelian_factor(), {t12, t1}).remainder.is_zero());
  CHECK(r.phi == T(t12) - C(1));
  CHECK(r.phi.total_degree() == 1);
  CHECK(r.phi_at_22 == 1);
  CHECK(r.square_free);
  CHECK(r.q == abelian_factor() * r.phi * BigRational(-1));
  // Parabolic representation a = [[1,1],[0,1]], b = [[1,0],[-1,1]]: t1 = 2, t[1,2] = 1.
  const Representation rep({SL2IntMatrix::upper(1), SL2IntMatrix::lower(-1)});
  const GroupWord w = two_bridge_word(p);
  CHECK(eval_word(concat(w, parse_word("a", 2)), rep) == eval_word(concat(parse_word("b", 2), w), rep));
  CHECK(evaluate(r.phi, {{t1, 2}, {t12, BigRational(rep.subset_trace(t12))}}) == 0);
}

TEST_CASE("figure-eight") {
  const auto p = two_bridge_preset("fig8");
  const CharVarResult r = two_bridge_charpoly(p);
  CHECK(!r.q.is_zero());
  CHECK(r.phi == T(t1) * T(t1) * T(t12) - C(2) * T(t1) * T(t1) - T(t12) * T(t12) + T(t12) + C(1));
  CHECK(r.phi_at_22 == -1);
  CHECK(r.square_free);
  CHECK((r.phi * abelian_factor() == r.q || r.phi * abelian_factor() == -r.q));
}

TEST_CASE("Phi cuts out the nonabelian Riley representations") {
  for (const char* name : {"trefoil", "fig8"}) {
    const auto p = two_bridge_preset(name);
    const CharVarResult r = two_bridge_charpoly(p);
    for (long num : {2, 3, -2, 5})
      for (long den : {1, 3}) CHECK(riley_divisible(p, r.phi, BigRational(num, den)));
    const RileyReport report = riley_cross_check(p, r);
    CHECK(report.passed());
    CHECK(report.points > 0);
    CHECK(report.controls > 0);
    // A wrong polynomial is caught.
    CharVarResult wrong = r;
    wrong.phi = T(t12) + C(1);
    CHECK(!riley_cross_check(p, wrong).passed());
    CHECK(!riley_divisible(p, wrong.phi, BigRational(2)));
  }
}

TEST_CASE("property: random presentations divide exactly, vanish on the abelian line, and are square-free") {
  auto g = test::stream(61);
  for (int i = 0; i < 12; ++i) {
    const TwoBridgePresentation p = random_presentation(g, 4);
    const CharVarResult r = two_bridge_charpoly(p);
    CHECK(!r.q.is_zero());
    CHECK(on_abelian_line(r.q).is_zero());
    CHECK((r.phi * abelian_factor() == r.q || r.phi * abelian_factor() == -r.q));
    CHECK(r.square_free);
    CHECK(r.phi_at_22 != 0);
    CHECK(riley_divisible(p, r.phi, BigRational(3)));
    const TracePoly swapped = two_bridge_swapped_q(p);
    CHECK((swapped == r.q || swapped == -r.q));
    CHECK(trace_poly_from_json(to_json(r)["Phi"]) == r.phi);
  }
}

TEST_CASE("X(Z^2) identity") {
  CHECK(check_x_z2_identity());
  CHECK(!check_x_z2_identity(-5));
  CHECK(check_x_z2_identity(-4, true));
  CHECK(!check_x_z2_identity(-3, true));
}

TEST_CASE("group specs and generators") {
  CHECK(to_string(parse_group_spec("free:3")) == "free:3");
  CHECK(parse_group_spec("abelian:2").kind == GroupKind::abelian);
  CHECK_THROWS_AS(parse_group_spec("free:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("cyclic:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_spec("free"), std::invalid_argument);
  CHECK(harvest_generators(parse_group_spec("free:3")).size() == 7);
  CHECK(harvest_generators(parse_group_spec("free:4")).size() == 14);
  CHECK(harvest_generators(parse_group_spec("abelian:3")).size() == 6);
  // C(k + d, d) monomials in k variables of degree <= d.
  CHECK(monomials_up_to({t1, t12}, 3).size() == 10);
  CHECK(monomials_up_to(harvest_generators(parse_group_spec("abelian:2")), 3).size() == 20);
  const auto ms = monomials_up_to({t1, SubsetVar(0b10), t12}, 4);
  for (std::size_t i = 1; i < ms.size(); ++i) CHECK(grlex_less(ms[i - 1], ms[i]));
}

TEST_CASE("harvest: abelian rank 2, degree 3") {
  const RelationBasis b = harvest_relations(parse_group_spec("abelian:2"), 3, 0, 11);
  REQUIRE(b.relations.size() == 1);
  const SubsetVar u1(0b1), u2(0b10), v(0b11);
  const TracePoly z2_relation = T(u1) * T(u1) + T(u2) * T(u2) + T(v) * T(v) - T(u1) * T(u2) * T(v) - C(4);
  CHECK(b.relations[0] == -z2_relation);
  CHECK(b.samples == 2 * 20 + 16);
  CHECK(verify_relations(b, 50, 11) == 0);
  // Diagonal representations diag(l, 1/l), diag(m, 1/m).
  auto g = test::stream(62);
  for (int i = 0; i < 100; ++i) {
    BigRational l = test::small_rational(g), m = test::small_rational(g);
    if (l == 0 || m == 0) continue;
    const Assignment at{{u1, l + 1 / l}, {u2, m + 1 / m}, {v, l * m + 1 / (l * m)}};
    CHECK(evaluate(b.relations[0], at) == 0);
  }
  const RelationBasis round = relation_basis_from_json(nlohmann::json::parse(to_json(b).dump()));
  CHECK(round.relations == b.relations);
  CHECK(round.generators == b.generators);
  CHECK(to_json(round) == to_json(b));
}

TEST_CASE("harvest: free rank 2 has no relations") {
  const RelationBasis b = harvest_relations(parse_group_spec("free:2"), 4, 0, 11);
  CHECK(b.relations.empty());
  CHECK(tangent_dim_at_trivial(b).tangent_dim == 3);
}

TEST_CASE("harvest errors") {
  CHECK_THROWS_AS(harvest_relations(parse_group_spec("abelian:2"), 3, 10, 11), HarvestError);
  CHECK_NOTHROW(harvest_relations(parse_group_spec("abelian:2"), 3, 40, 11));
  CHECK_THROWS(relation_basis_from_json(nlohmann::json::parse(R"({"group":"free:2"})")));
}

TEST_CASE("harvest is deterministic in the seed") {
  const auto g = parse_group_spec("abelian:3");
  CHECK(to_json(harvest_relations(g, 3, 0, 5)) == to_json(harvest_relations(g, 3, 0, 5)));
}

TEST_CASE("tangent dimensions at the trivial character") {
  struct Case {
    const char* group;
    unsigned degree;
    std::size_t ambient, tangent;
  };
  for (const Case c : {Case{"abelian:2", 3, 3, 3}, Case{"abelian:3", 4, 6, 6}, Case{"free:3", 6, 7, 7}}) {
    const RelationBasis b = harvest_relations(parse_group_spec(c.group), c.degree, 0, 11);
    CHECK(!b.relations.empty());
    CHECK(verify_relations(b, 50, 11) == 0);
    const TangentReport t = tangent_dim_at_trivial(b);
    CHECK(t.ambient_dim == c.ambient);
    CHECK(t.jacobian_rank_at_chi0 == 0);
    CHECK(t.tangent_dim == c.tangent);
    CHECK(t.gradients_vanish);
    if (std::string(c.group) == "free:3") {
      const SubsetVar t123(0b111);
      bool quadratic = false;
      for (const auto& r : b.relations) {
        unsigned deg = 0;
        for (const auto& [m, coeff] : r.terms()) deg = std::max(deg, m.power_of(t123));
        quadratic = quadratic || deg == 2;
      }
      CHECK(quadratic);
    }
  }
}

TEST_CASE("tangent detects a nonvanishing gradient") {
  RelationBasis b = harvest_relations(parse_group_spec("abelian:2"), 3, 0, 11);
  b.relations.push_back(T(t1) - C(2));
  const TangentReport t = tangent_dim_at_trivial(b);
  CHECK(t.jacobian_rank_at_chi0 == 1);
  CHECK(t.tangent_dim == 2);
  CHECK(!t.gradients_vanish);
}
