#include "skeinlab/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace skeinlab {

bool letter_less(const Letter& x, const Letter& y) {
  if (x.index != y.index) return x.index < y.index;
  const bool xneg = x.exponent < 0;
  const bool yneg = y.exponent < 0;
  if (xneg != yneg) return !xneg;
  return std::abs(x.exponent) < std::abs(y.exponent);
}

GroupWord::GroupWord(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
}

int GroupWord::length() const {
  int total = 0;
  for (const auto& l : letters_) total += std::abs(l.exponent);
  return total;
}

void GroupWord::push_back(Letter letter) {
  if (letter.index < 1 || letter.index > rank_)
    throw std::out_of_range("generator index " + std::to_string(letter.index) +
                            " outside 1.." + std::to_string(rank_));
  if (letter.exponent == 0) return;
  if (!letters_.empty() && letters_.back().index == letter.index) {
    letters_.back().exponent += letter.exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(letter);
}

bool word_less(const GroupWord& x, const GroupWord& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  const auto& a = x.letters();
  const auto& b = y.letters();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (letter_less(a[i], b[i])) return true;
    if (letter_less(b[i], a[i])) return false;
  }
  return false;
}

GroupWord reduce_word(const std::vector<std::pair<int, int>>& raw, int rank) {
  GroupWord w(rank);
  for (const auto& [index, exponent] : raw) w.push_back({index, exponent});
  return w;
}

GroupWord invert(const GroupWord& w) {
  GroupWord out(w.rank());
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it)
    out.push_back({it->index, -it->exponent});
  return out;
}

GroupWord concat(const GroupWord& x, const GroupWord& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch in concat");
  GroupWord out = x;
  for (const auto& l : y.letters()) out.push_back(l);
  return out;
}

GroupWord cyclic_reduce(const GroupWord& w) {
  std::vector<Letter> ls = w.letters();
  // Merge the last letter into the first while they share an index.
  std::size_t begin = 0;
  while (ls.size() - begin >= 2 && ls[begin].index == ls.back().index) {
    ls[begin].exponent += ls.back().exponent;
    ls.pop_back();
    if (ls[begin].exponent == 0) ++begin;
  }
  GroupWord out(w.rank());
  for (std::size_t i = begin; i < ls.size(); ++i) out.push_back(ls[i]);
  return out;
}

GroupWord rotate(const GroupWord& w, std::size_t offset) {
  GroupWord out(w.rank());
  const auto& ls = w.letters();
  const std::size_t n = ls.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(ls[(offset + i) % n]);
  return out;
}

CyclicKey cyclic_key(const GroupWord& w) {
  const GroupWord forward = cyclic_reduce(w);
  const GroupWord backward = invert(forward);
  GroupWord best = forward;
  for (const GroupWord* base : {&forward, &backward}) {
    for (std::size_t i = 0; i < base->size(); ++i) {
      GroupWord r = rotate(*base, i);
      if (word_less(r, best)) best = std::move(r);
    }
  }
  return CyclicKey(std::move(best));
}

GroupWord subset_word(const std::vector<int>& indices, int rank) {
  if (indices.empty()) throw std::invalid_argument("subset_word needs a nonempty subset");
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("subset has repeated indices");
  GroupWord w(rank);
  for (int i : sorted) w.push_back({i, 1});
  return w;
}

GroupWord subset_word(std::uint64_t mask, int rank) {
  std::vector<int> indices;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1U) indices.push_back(i + 1);
  return subset_word(indices, rank);
}

bool AbelianVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long c) { return c == 0; });
}

AbelianVector make_abelian_vector(std::vector<long> coords) {
  if (coords.empty()) throw std::invalid_argument("abelian vector needs rank >= 1");
  AbelianVector v;
  v.rank = static_cast<int>(coords.size());
  v.coords = std::move(coords);
  return v;
}

namespace {

int parse_int(std::string_view s, std::string_view token) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed word token '" + std::string(token) + "'");
  return value;
}

}  // namespace

GroupWord parse_word(std::string_view text, int rank) {
  GroupWord w(rank);
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    std::string_view tok = token;
    std::string_view name = tok;
    int exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      name = tok.substr(0, caret);
      exponent = parse_int(tok.substr(caret + 1), tok);
    }
    int index = 0;
    if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'd') {
      index = name[0] - 'a' + 1;
    } else if (name.size() >= 2 && name[0] == 'g') {
      index = parse_int(name.substr(1), tok);
    } else {
      throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
    }
    if (index < 1 || index > rank)
      throw std::out_of_range("generator '" + std::string(name) + "' exceeds rank " +
                              std::to_string(rank));
    w.push_back({index, exponent});
  }
  return w;
}

std::string format_word(const GroupWord& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    if (w.rank() <= 4)
      out += static_cast<char>('a' + l.index - 1);
    else
      out += "g" + std::to_string(l.index);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

std::size_t CyclicKeyHash::operator()(const CyclicKey& key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(key.canonical().rank());
  for (const auto& l : key.canonical().letters()) {
    const std::uint64_t x = (static_cast<std::uint64_t>(l.index) << 32) ^
                            static_cast<std::uint32_t>(l.exponent);
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace skeinlab
