// Random generators shared by the property tests.

#pragma once

#include <random>
#include <utility>
#include <vector>

#include "skeinlab/laurent.hpp"
#include "skeinlab/oracle.hpp"
#include "skeinlab/poly.hpp"
#include "skeinlab/words.hpp"

namespace test {

inline std::mt19937_64 stream(std::uint64_t tag) { return skeinlab::make_stream(0x7e57, tag); }

inline int uniform(std::mt19937_64& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

// Unreduced (index, exponent) list with exponents in [-3, 3] \ {0}.
inline std::vector<std::pair<int, int>> raw_word(std::mt19937_64& g, int rank, int max_letters) {
  std::vector<std::pair<int, int>> out;
  const int n = uniform(g, 0, max_letters);
  for (int i = 0; i < n; ++i) {
    int e = 0;
    while (e == 0) e = uniform(g, -3, 3);
    out.emplace_back(uniform(g, 1, rank), e);
  }
  return out;
}

inline skeinlab::GroupWord word(std::mt19937_64& g, int rank, int max_letters) {
  return skeinlab::reduce_word(raw_word(g, rank, max_letters), rank);
}

inline skeinlab::BigRational small_rational(std::mt19937_64& g) {
  skeinlab::BigRational q(uniform(g, -6, 6), uniform(g, 1, 4));
  q.canonicalize();
  return q;
}

// Random polynomial in t_S, S within {1..rank}, degree <= max_degree.
inline skeinlab::TracePoly poly(std::mt19937_64& g, int rank, int terms, unsigned max_degree) {
  skeinlab::TracePoly p;
  for (int t = 0; t < terms; ++t) {
    std::vector<skeinlab::Factor> fs;
    const unsigned deg = static_cast<unsigned>(uniform(g, 0, static_cast<int>(max_degree)));
    skeinlab::Monomial m;
    for (unsigned k = 0; k < deg; ++k) {
      const auto mask = static_cast<std::uint64_t>(uniform(g, 1, (1 << rank) - 1));
      m = m * skeinlab::Monomial::of(skeinlab::SubsetVar(mask));
    }
    p.add_term(small_rational(g), m);
  }
  return p;
}

inline skeinlab::LaurentPoly laurent(std::mt19937_64& g, int rank, int terms) {
  skeinlab::LaurentPoly p(rank);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(rank));
    for (auto& x : e) x = uniform(g, -3, 3);
    p.add_term(small_rational(g), e);
  }
  return p;
}

inline skeinlab::Assignment point(std::mt19937_64& g, const std::vector<skeinlab::SubsetVar>& vars) {
  skeinlab::Assignment a;
  for (auto v : vars) a[v] = small_rational(g);
  return a;
}

}  // namespace test
