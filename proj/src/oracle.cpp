#include "skeinlab/oracle.hpp"

#include <stdexcept>

namespace skeinlab {

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t substream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(substream),
                    static_cast<std::uint32_t>(substream >> 32), 0x5e1u};
  return std::mt19937_64(seq);
}

SL2IntMatrix::SL2IntMatrix() : a_(1), b_(0), c_(0), d_(1) {}

SL2IntMatrix::SL2IntMatrix(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (determinant() != 1) throw std::domain_error("matrix determinant is not 1");
}

SL2IntMatrix SL2IntMatrix::inverse() const { return {d_, -b_, -c_, a_}; }

SL2IntMatrix SL2IntMatrix::power(long exponent) const {
  SL2IntMatrix base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  SL2IntMatrix result;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

SL2IntMatrix operator*(const SL2IntMatrix& x, const SL2IntMatrix& y) {
  // The constructor re-checks the determinant on every product.
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

SL2IntMatrix walk_product(const std::vector<ElementaryStep>& steps) {
  SL2IntMatrix m;
  for (const auto& s : steps)
    m = m * (s.upper ? SL2IntMatrix::upper(s.entry) : SL2IntMatrix::lower(s.entry));
  return m;
}

SL2IntMatrix sample_sl2(std::mt19937_64& stream, int walk_length) {
  if (walk_length < 1) throw std::invalid_argument("walk_length must be >= 1");
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::vector<ElementaryStep> steps;
  steps.reserve(static_cast<std::size_t>(walk_length));
  for (int i = 0; i < walk_length; ++i) {
    const bool upper = coin(stream) == 1;
    steps.push_back({upper, entry(stream)});
  }
  return walk_product(steps);
}

Representation::Representation(std::vector<SL2IntMatrix> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("representation needs rank >= 1");
}

Representation Representation::sample(int rank, std::mt19937_64& stream, int walk_length) {
  if (rank < 1) throw std::invalid_argument("representation needs rank >= 1");
  std::vector<SL2IntMatrix> images;
  for (int i = 0; i < rank; ++i) images.push_back(sample_sl2(stream, walk_length));
  return Representation(std::move(images));
}

BigInt Representation::subset_trace(SubsetVar s) const {
  SL2IntMatrix m;
  for (int i : s.indices()) {
    if (i > rank()) throw std::out_of_range("subset index exceeds representation rank");
    m = m * image(i);
  }
  return m.trace();
}

Assignment Representation::subset_traces(const std::vector<SubsetVar>& vars) const {
  Assignment out;
  for (const auto& v : vars) out.emplace(v, BigRational(subset_trace(v)));
  return out;
}

SL2IntMatrix eval_word(const GroupWord& w, const Representation& rep) {
  if (w.rank() != rep.rank())
    throw std::invalid_argument("word rank " + std::to_string(w.rank()) +
                                " does not match representation rank " + std::to_string(rep.rank()));
  SL2IntMatrix m;
  for (const auto& l : w.letters()) m = m * rep.image(l.index).power(l.exponent);
  return m;
}

}  // namespace skeinlab
