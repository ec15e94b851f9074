// Elements of free groups F_n and free abelian groups Z^n.
//
// Free-group words are kept in run-length form: a word is a sequence of
// letters g_i^k with k != 0 and no two neighbouring letters sharing an index.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skeinlab {

struct Letter {
  int index = 1;     // 1..rank
  int exponent = 1;  // nonzero

  bool operator==(const Letter&) const = default;
};

// Total order on letters: index, then sign (positive first), then |exponent|.
bool letter_less(const Letter& x, const Letter& y);

class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(int rank);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  // Sum of |exponent| over all letters.
  int length() const;

  // Appends a letter and freely reduces against the tail.
  void push_back(Letter letter);

  bool operator==(const GroupWord&) const = default;

 private:
  int rank_ = 1;
  std::vector<Letter> letters_;
};

// Length first, then letter by letter.
bool word_less(const GroupWord& x, const GroupWord& y);

GroupWord reduce_word(const std::vector<std::pair<int, int>>& raw, int rank);
GroupWord invert(const GroupWord& w);
GroupWord concat(const GroupWord& x, const GroupWord& y);

// Rotates and merges until the first and last letters have distinct indices.
GroupWord cyclic_reduce(const GroupWord& w);

// Rotation of a cyclically reduced word starting at letter `offset`.
GroupWord rotate(const GroupWord& w, std::size_t offset);

class CyclicKey {
 public:
  const GroupWord& canonical() const { return canonical_; }
  bool operator==(const CyclicKey&) const = default;

 private:
  friend CyclicKey cyclic_key(const GroupWord& w);
  explicit CyclicKey(GroupWord canonical) : canonical_(std::move(canonical)) {}
  GroupWord canonical_;
};

// Least word among all rotations of the cyclic reduction of w and of w^-1.
CyclicKey cyclic_key(const GroupWord& w);

// g_{i1} g_{i2} ... g_{ik} for the sorted indices of a nonempty subset.
GroupWord subset_word(const std::vector<int>& indices, int rank);
GroupWord subset_word(std::uint64_t mask, int rank);

struct AbelianVector {
  int rank = 1;
  std::vector<long> coords;

  bool is_zero() const;
  bool operator==(const AbelianVector&) const = default;
};

AbelianVector make_abelian_vector(std::vector<long> coords);

// Word text syntax: tokens a b c d (rank <= 4) or g<k>, each with an optional
// ^<int> suffix. The empty string or "e" is the identity.
GroupWord parse_word(std::string_view text, int rank);
std::string format_word(const GroupWord& w);

struct CyclicKeyHash {
  std::size_t operator()(const CyclicKey& key) const;
};

}  // namespace skeinlab
