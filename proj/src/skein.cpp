#include "skeinlab/skein.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace skeinlab {

namespace {

SubsetVar single(int i) { return SubsetVar(std::uint64_t{1} << (i - 1)); }
SubsetVar pair(int j, int k) { return SubsetVar((std::uint64_t{1} << (j - 1)) | (std::uint64_t{1} << (k - 1))); }

void check_compatible(const SkeinElement& x, const SkeinElement& y) {
  if (x.rank != y.rank) throw std::invalid_argument("skein elements have different ranks");
  if (x.mode != y.mode) throw std::invalid_argument("skein elements have different modes");
  if (x.kind != y.kind) throw std::invalid_argument("skein elements live in different groups");
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Polynomials in a_1..a_n, b_1..b_n as exponent vectors of length 2n.
using AbPoly = std::map<std::vector<unsigned>, BigRational>;

SkeinElement abelian_dyadic(const AbelianVector& v) {
  const auto n = static_cast<std::size_t>(v.rank);

  // x^v + x^-v with x_i^{+-1} = (a_i +- b_i)/2: only even total b-degree survives, doubled.
  AbPoly expanded{{std::vector<unsigned>(2 * n, 0), BigRational(2)}};
  for (std::size_t i = 0; i < n; ++i) {
    const long e = v.coords[i];
    if (e == 0) continue;
    const auto m = static_cast<unsigned long>(std::labs(e));
    const int sign = e > 0 ? 1 : -1;
    AbPoly next;
    for (const auto& [exps, c] : expanded) {
      for (unsigned long q = 0; q <= m; ++q) {
        BigRational coeff = c * BigRational(binomial(m, q));
        coeff /= BigRational(BigInt(BigInt(1) << static_cast<mp_bitcnt_t>(m)));
        if (sign < 0 && (q & 1UL)) coeff = -coeff;
        auto key = exps;
        key[i] += static_cast<unsigned>(m - q);
        key[n + i] += static_cast<unsigned>(q);
        next[key] += coeff;
      }
    }
    expanded = std::move(next);
  }

  std::map<unsigned, TracePoly> lowered;  // (u_i^2 - 4)^m cache per (i, m)
  auto b_square_power = [&](std::size_t i, unsigned m) {
    const unsigned key = static_cast<unsigned>(i) * 1024U + m;
    auto it = lowered.find(key);
    if (it == lowered.end()) {
      const auto u = TracePoly::variable(single(static_cast<int>(i) + 1));
      it = lowered.emplace(key, pow(u * u - TracePoly::constant(4), m)).first;
    }
    return it->second;
  };

  TracePoly out;
  for (const auto& [exps, c] : expanded) {
    if (c == 0) continue;
    unsigned b_degree = 0;
    for (std::size_t i = 0; i < n; ++i) b_degree += exps[n + i];
    if (b_degree % 2 != 0) continue;

    std::vector<Factor> us;
    for (std::size_t i = 0; i < n; ++i)
      if (exps[i] > 0) us.push_back({single(static_cast<int>(i) + 1), exps[i]});
    TracePoly term = TracePoly::term(c, Monomial(std::move(us)));

    std::vector<int> odd;
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned q = exps[n + i];
      if (q >= 2) term = term * b_square_power(i, q / 2);
      if (q % 2 == 1) odd.push_back(static_cast<int>(i) + 1);
    }
    for (std::size_t p = 0; p + 1 < odd.size(); p += 2) {
      const int j = odd[p], k = odd[p + 1];
      const TracePoly bjbk = TracePoly::variable(pair(j, k)) * BigRational(2) -
                             TracePoly::variable(single(j)) * TracePoly::variable(single(k));
      term = term * bjbk;
    }
    out += term;
  }
  return {v.rank, ReductionMode::dyadic, GroupKind::abelian, std::move(out)};
}

SkeinElement abelian_integral(const AbelianVector& v) {
  GroupWord w(v.rank);
  for (std::size_t i = 0; i < v.coords.size(); ++i)
    w.push_back({static_cast<int>(i) + 1, static_cast<int>(v.coords[i])});
  TraceEngine engine(ReductionMode::integral);
  return {v.rank, ReductionMode::integral, GroupKind::abelian, engine.reduce(w)};
}

}  // namespace

SkeinElement skein_constant(int rank, ReductionMode mode, GroupKind kind, const BigRational& c) {
  return {rank, mode, kind, TracePoly::constant(c)};
}

SkeinElement from_word(TraceEngine& engine, const GroupWord& w) {
  return {w.rank(), engine.mode(), GroupKind::free_group, engine.reduce(w)};
}

SkeinElement multiply(const SkeinElement& x, const SkeinElement& y) {
  check_compatible(x, y);
  return {x.rank, x.mode, x.kind, x.poly * y.poly};
}

SkeinElement abelian_from_vector(const AbelianVector& v, ReductionMode mode) {
  if (static_cast<int>(v.coords.size()) != v.rank || v.rank < 1)
    throw std::invalid_argument("malformed abelian vector");
  return mode == ReductionMode::dyadic ? abelian_dyadic(v) : abelian_integral(v);
}

SkeinElement abelian_multiply(const SkeinElement& x, const SkeinElement& y) {
  if (x.kind != GroupKind::abelian || y.kind != GroupKind::abelian)
    throw std::invalid_argument("abelian_multiply needs abelian elements");
  return multiply(x, y);
}

LaurentPoly to_laurent(const SkeinElement& x) {
  if (x.kind != GroupKind::abelian) throw std::invalid_argument("to_laurent needs an abelian element");
  const int rank = x.rank;
  return evaluate_in<LaurentPoly>(
      x.poly,
      [rank](SubsetVar s) {
        std::vector<long> e(static_cast<std::size_t>(rank), 0);
        for (int i : s.indices()) {
          if (i > rank) throw std::out_of_range("generator index exceeds abelian rank");
          e[static_cast<std::size_t>(i - 1)] = 1;
        }
        return symmetric_monomial(e);
      },
      [rank](const BigRational& c) { return LaurentPoly::constant(rank, c); });
}

std::string to_string(const SkeinElement& x) {
  return to_string(x.poly, x.kind == GroupKind::abelian ? VarStyle::abelian : VarStyle::trace);
}

}  // namespace skeinlab
