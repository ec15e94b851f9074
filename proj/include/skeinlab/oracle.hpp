// Exact SL2(Z) matrices: the ground truth every symbolic identity is checked against.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "skeinlab/poly.hpp"
#include "skeinlab/rational.hpp"
#include "skeinlab/words.hpp"

namespace skeinlab {

// Deterministic stream for (seed, substream); substreams are independent.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t substream = 0);

class SL2IntMatrix {
 public:
  SL2IntMatrix();  // identity
  // Throws std::domain_error unless ad - bc == 1.
  SL2IntMatrix(BigInt a, BigInt b, BigInt c, BigInt d);

  static SL2IntMatrix identity() { return {}; }
  static SL2IntMatrix upper(long entry) { return {1, entry, 0, 1}; }
  static SL2IntMatrix lower(long entry) { return {1, 0, entry, 1}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  BigInt trace() const { return a_ + d_; }
  BigInt determinant() const { return a_ * d_ - b_ * c_; }
  SL2IntMatrix inverse() const;  // adjugate
  SL2IntMatrix power(long exponent) const;

  friend SL2IntMatrix operator*(const SL2IntMatrix& x, const SL2IntMatrix& y);
  bool operator==(const SL2IntMatrix& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }

 private:
  BigInt a_, b_, c_, d_;
};

struct ElementaryStep {
  bool upper = true;
  long entry = 0;
};

// Product of the given elementary unitriangular matrices, left to right.
SL2IntMatrix walk_product(const std::vector<ElementaryStep>& steps);

// Random walk of `walk_length` elementary steps with entries in [-3, 3].
SL2IntMatrix sample_sl2(std::mt19937_64& stream, int walk_length = 8);

class Representation {
 public:
  explicit Representation(std::vector<SL2IntMatrix> images);
  static Representation sample(int rank, std::mt19937_64& stream, int walk_length = 8);

  int rank() const { return static_cast<int>(images_.size()); }
  const SL2IntMatrix& image(int index) const { return images_.at(static_cast<std::size_t>(index - 1)); }

  // tr(rho(g_{i1} ... g_{ik})) for every subset variable of a rank-n word.
  BigInt subset_trace(SubsetVar s) const;
  Assignment subset_traces(const std::vector<SubsetVar>& vars) const;

 private:
  std::vector<SL2IntMatrix> images_;
};

// Throws std::invalid_argument on rank mismatch.
SL2IntMatrix eval_word(const GroupWord& w, const Representation& rep);

}  // namespace skeinlab
