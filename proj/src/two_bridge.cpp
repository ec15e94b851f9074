#include <optional>
#include <stdexcept>

#include "skeinlab/bivariate.hpp"
#include "skeinlab/charvar.hpp"
#include "skeinlab/poly_json.hpp"
#include "skeinlab/trace_engine.hpp"

namespace skeinlab {

namespace {

const SubsetVar kA(0b01);
const SubsetVar kB(0b10);
const SubsetVar kAB(0b11);

TracePoly identify_b_with_a(const TracePoly& p) {
  return p.substitute([](SubsetVar v) -> std::optional<TracePoly> {
    if (v == kB) return TracePoly::variable(kA);
    return std::nullopt;
  });
}

GroupWord swap_ab(const GroupWord& w) {
  GroupWord out(2);
  for (const auto& l : w.letters()) out.push_back({3 - l.index, l.exponent});
  return out;
}

// [w] - [x w y^-1] with t2 := t1.
TracePoly relation_difference(const GroupWord& w, int x, int y) {
  GroupWord conj(2);
  conj.push_back({x, 1});
  for (const auto& l : w.letters()) conj.push_back(l);
  conj.push_back({y, -1});
  TraceEngine engine(ReductionMode::integral);
  return identify_b_with_a(engine.reduce(w) - engine.reduce(conj));
}

// a + b sqrt(d). Elements combined in one computation share d.
struct Quad {
  BigRational a, b, d;
  friend Quad operator+(const Quad& x, const Quad& y) { return {x.a + y.a, x.b + y.b, x.d}; }
  friend Quad operator-(const Quad& x, const Quad& y) { return {x.a - y.a, x.b - y.b, x.d}; }
  friend Quad operator*(const Quad& x, const Quad& y) {
    return {x.a * y.a + x.d * x.b * y.b, x.a * y.b + x.b * y.a, x.d};
  }
  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const Quad& o) const { return a == o.a && b == o.b; }
};

struct Mat {
  Quad m[4];
  friend Mat operator*(const Mat& x, const Mat& y) {
    return {{x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
             x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]}};
  }
  bool operator==(const Mat& o) const {
    return m[0] == o.m[0] && m[1] == o.m[1] && m[2] == o.m[2] && m[3] == o.m[3];
  }
  Mat inverse() const {  // det 1
    const Quad zero{0, 0, m[0].d};
    return {{m[3], zero - m[1], zero - m[2], m[0]}};
  }
};

Mat eval(const GroupWord& w, const Mat& a, const Mat& b, const Quad& one) {
  const Quad zero{0, 0, one.d};
  Mat out{{one, zero, zero, one}};
  for (const auto& l : w.letters()) {
    const Mat& g = l.index == 1 ? a : b;
    const Mat step = l.exponent > 0 ? g : g.inverse();
    for (int i = 0; i < std::abs(l.exponent); ++i) out = out * step;
  }
  return out;
}

// Sign so that the leading term is positive when t[1,2] outranks t1 within
// a total degree.
TracePoly normalize_phi(const TracePoly& p) {
  TracePoly out = primitive_normalize(p);
  if (out.is_zero()) return out;
  const Monomial* lead = nullptr;
  for (const auto& [m, c] : out.terms())
    if (!lead || m.degree() > lead->degree() ||
        (m.degree() == lead->degree() && m.power_of(kAB) > lead->power_of(kAB)))
      lead = &m;
  if (out.coefficient(*lead) < 0) out = -out;
  return out;
}

std::optional<BigRational> rational_sqrt(const BigRational& q) {
  if (q < 0) return std::nullopt;
  const BigInt num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  BigRational out{BigInt(sqrt(num)), BigInt(sqrt(den))};
  out.canonicalize();
  return out;
}

}  // namespace

TwoBridgePresentation two_bridge_preset(const std::string& name) {
  if (name == "trefoil") return {{1}};
  if (name == "fig8") return {{1, -1}};
  throw std::invalid_argument("unknown knot preset '" + name + "' (expected trefoil or fig8)");
}

GroupWord two_bridge_word(const TwoBridgePresentation& p) {
  const auto& e = p.epsilons;
  if (e.empty()) throw std::invalid_argument("epsilon vector is empty");
  for (int x : e)
    if (x != 1 && x != -1) throw std::invalid_argument("epsilons must be +1 or -1");
  GroupWord w(2);
  for (std::size_t i = 0; i < e.size(); ++i) {
    w.push_back({1, e[i]});
    w.push_back({2, e[e.size() - 1 - i]});
  }
  return w;
}

TracePoly abelian_factor() {
  const TracePoly t1 = TracePoly::variable(kA);
  return t1 * t1 - TracePoly::variable(kAB) - TracePoly::constant(2);
}

CharVarResult two_bridge_charpoly(const TwoBridgePresentation& p) {
  CharVarResult r;
  r.q = relation_difference(two_bridge_word(p), 2, 1);
  const DivisionResult div = poly_divide(r.q, abelian_factor(), {kAB, kA});
  if (!div.remainder.is_zero())
    throw NonExactDivision("Q is not divisible by t1^2 - t[1,2] - 2; remainder " +
                           to_string(div.remainder));
  r.phi = normalize_phi(div.quotient);
  r.phi_at_22 = evaluate(r.phi, {{kA, BigRational(2)}, {kAB, BigRational(2)}});
  r.square_free = is_square_free(r.phi, kA, kAB);
  return r;
}

TracePoly two_bridge_swapped_q(const TwoBridgePresentation& p) {
  return relation_difference(swap_ab(two_bridge_word(p)), 1, 2);
}

RileyReport riley_cross_check(const TwoBridgePresentation& p, const CharVarResult& r) {
  const GroupWord w = two_bridge_word(p);
  RileyReport report;
  const std::vector<BigRational> lambdas{BigRational(2), BigRational(3), BigRational(1, 2),
                                         BigRational(5, 3), BigRational(-2), BigRational(7, 2)};
  for (const BigRational& l : lambdas) {
    const BigRational t1 = l + 1 / l;
    const TracePoly slice = r.phi.substitute([&](SubsetVar v) -> std::optional<TracePoly> {
      if (v == kA) return TracePoly::constant(t1);
      return std::nullopt;
    });
    const unsigned deg = slice.total_degree();
    if (slice.is_zero() || deg == 0 || deg > 2) {
      ++report.skipped;
      continue;
    }
    const BigRational c0 = slice.coefficient(Monomial());
    const BigRational c1 = slice.coefficient(Monomial::of(kAB, 1));
    const BigRational c2 = slice.coefficient(Monomial::of(kAB, 2));

    // Roots y = p + s*sqrt(d).
    std::vector<Quad> roots;
    if (deg == 1) {
      roots.push_back({-c0 / c1, 0, 0});
    } else {
      const BigRational disc = c1 * c1 - 4 * c2 * c0;
      const BigRational centre = -c1 / (2 * c2);
      if (auto s = rational_sqrt(disc)) {
        roots.push_back({centre + *s / (2 * c2), 0, 0});
        if (*s != 0) roots.push_back({centre - *s / (2 * c2), 0, 0});
      } else {
        roots.push_back({centre, BigRational(1) / (2 * c2), disc});
        roots.push_back({centre, BigRational(-1) / (2 * c2), disc});
      }
    }

    for (const Quad& y : roots) {
      const BigRational d = y.d;
      const Quad one{1, 0, d}, zero{0, 0, d}, lam{l, 0, d}, inv{1 / l, 0, d};
      auto check = [&](const Quad& yy) {
        const Quad c = Quad{l * l + 1 / (l * l), 0, d} - yy;
        const Mat a{{lam, one, zero, inv}};
        const Mat b{{lam, zero, zero - c, inv}};
        const Mat wm = eval(w, a, b, one);
        return std::pair{wm * a == b * wm, !(a * b == b * a)};
      };
      ++report.points;
      const auto [holds, nonab] = check(y);
      report.relation_holds += holds;
      report.nonabelian += nonab;

      const Quad shifted = y + one;
      const Quad q_val = evaluate_in<Quad>(
          r.q, [&](SubsetVar v) { return v == kA ? Quad{t1, 0, d} : shifted; },
          [&](const BigRational& c) { return Quad{c, 0, d}; });
      if (!q_val.is_zero()) {
        ++report.controls;
        report.controls_rejected += !check(shifted).first;
      }
    }
  }
  return report;
}

nlohmann::json to_json(const CharVarResult& r) {
  return {
      {"Q", to_json(r.q)},
      {"Phi", to_json(r.phi)},
      {"Q_pretty", to_string(r.q)},
      {"Phi_pretty", to_string(r.phi)},
      {"phi_at_22", to_string(r.phi_at_22)},
      {"square_free", r.square_free},
  };
}

}  // namespace skeinlab
