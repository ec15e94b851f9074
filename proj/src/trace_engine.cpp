#include "skeinlab/trace_engine.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <stdexcept>

namespace skeinlab {

std::string to_string(ReductionMode mode) {
  return mode == ReductionMode::integral ? "integral" : "dyadic";
}

ReductionMode parse_mode(const std::string& text) {
  if (text == "integral") return ReductionMode::integral;
  if (text == "dyadic") return ReductionMode::dyadic;
  throw std::invalid_argument("unknown reduction mode '" + text + "'");
}

RuleStats& RuleStats::operator+=(const RuleStats& o) {
  r1 += o.r1;
  r2 += o.r2;
  r3 += o.r3;
  r4 += o.r4;
  r5 += o.r5;
  memo_hits += o.memo_hits;
  base += o.base;
  return *this;
}

namespace {

using Letters = std::vector<Letter>;

// Concatenation of letter runs, freely reduced.
GroupWord join(int rank, std::initializer_list<const Letters*> parts) {
  GroupWord w(rank);
  for (const Letters* part : parts)
    for (const auto& l : *part) w.push_back(l);
  return w;
}

Letters slice(const Letters& ls, std::size_t begin, std::size_t end) {
  return {ls.begin() + static_cast<std::ptrdiff_t>(begin), ls.begin() + static_cast<std::ptrdiff_t>(end)};
}

TracePoly generator(int index) {
  return TracePoly::variable(SubsetVar(std::uint64_t{1} << (index - 1)));
}

std::uint64_t index_mask(const Letters& ls) {
  std::uint64_t mask = 0;
  for (const auto& l : ls) mask |= std::uint64_t{1} << (l.index - 1);
  return mask;
}

}  // namespace

TraceEngine::TraceEngine(ReductionMode mode) : mode_(mode) {
  if (mode_ == ReductionMode::dyadic) rule_ = &default_rule_k4();
}

TraceEngine::TraceEngine(ReductionMode mode, const RuleK4& rule) : mode_(mode), rule_(&rule) {}

TracePoly TraceEngine::reduce(const GroupWord& w) {
  if (w.rank() > 64) throw std::invalid_argument("rank above 64 is not supported");
  return reduce_canonical(cyclic_key(w).canonical());
}

TracePoly TraceEngine::reduce_canonical(const GroupWord& c) {
  if (c.is_identity()) return TracePoly::constant(2);
  const CyclicKey key = cyclic_key(c);
  if (auto it = memo_.find(key); it != memo_.end()) {
    ++stats_.memo_hits;
    return it->second;
  }
  TracePoly result = compute(c);
  memo_.emplace(key, result);
  return result;
}

TracePoly TraceEngine::compute(const GroupWord& c) {
  const int rank = c.rank();
  const Letters& ls = c.letters();
  const std::size_t k = ls.size();
  auto tr = [this](const GroupWord& w) { return reduce_canonical(cyclic_key(w).canonical()); };

  // R1: Cayley-Hamilton on the leftmost letter with |exponent| >= 2.
  for (std::size_t i = 0; i < k; ++i) {
    const int e = ls[i].exponent;
    if (std::abs(e) < 2) continue;
    ++stats_.r1;
    const int s = e > 0 ? 1 : -1;
    const Letters u = slice(ls, 0, i), v = slice(ls, i + 1, k);
    const Letters once{{ls[i].index, e - s}};
    const Letters twice = (e - 2 * s == 0) ? Letters{} : Letters{{ls[i].index, e - 2 * s}};
    return generator(ls[i].index) * tr(join(rank, {&u, &once, &v})) -
           tr(join(rank, {&u, &twice, &v}));
  }

  // R2: g^-1 = t_g - g.
  for (std::size_t i = 0; i < k; ++i) {
    if (ls[i].exponent != -1) continue;
    ++stats_.r2;
    const Letters u = slice(ls, 0, i), v = slice(ls, i + 1, k);
    const Letters pos{{ls[i].index, 1}};
    return generator(ls[i].index) * tr(join(rank, {&u, &v})) - tr(join(rank, {&u, &pos, &v}));
  }

  // From here on every exponent is +1.
  // R3: leftmost index occurring twice, w = X A X B.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (ls[j].index != ls[i].index) continue;
      ++stats_.r3;
      const Letters x{ls[i]};
      const Letters a = slice(ls, i + 1, j);
      Letters b = slice(ls, j + 1, k);
      const Letters head = slice(ls, 0, i);
      b.insert(b.end(), head.begin(), head.end());
      const GroupWord bw = join(rank, {&b});
      const Letters b_inv = invert(bw).letters();
      return tr(join(rank, {&x, &a})) * tr(join(rank, {&x, &b})) - tr(join(rank, {&a, &b_inv}));
    }
  }

  // R4: square-free, rotated so the minimal index is first. Swap the first
  // descending adjacent pair (C, B) using the three-block identity.
  for (std::size_t j = 1; j + 1 < k; ++j) {
    if (ls[j].index < ls[j + 1].index) continue;
    ++stats_.r4;
    const Letters cc{ls[j]}, bb{ls[j + 1]};
    Letters aa = slice(ls, j + 2, k);
    const Letters head = slice(ls, 0, j);
    aa.insert(aa.end(), head.begin(), head.end());
    const TracePoly ta = tr(join(rank, {&aa}));
    const TracePoly tb = generator(bb[0].index);
    const TracePoly tc = generator(cc[0].index);
    return ta * tr(join(rank, {&bb, &cc})) + tb * tr(join(rank, {&aa, &cc})) +
           tc * tr(join(rank, {&aa, &bb})) - ta * tb * tc - tr(join(rank, {&aa, &bb, &cc}));
  }

  // Sorted square-free word g_{i1} ... g_{ik}.
  if (mode_ == ReductionMode::dyadic && k >= 4) return apply_rule_k4(c);
  ++stats_.base;
  return TracePoly::variable(SubsetVar(index_mask(ls)));
}

TracePoly TraceEngine::apply_rule_k4(const GroupWord& c) {
  ++stats_.r5;
  const int rank = c.rank();
  const Letters& ls = c.letters();
  // Blocks (g_{i1}, g_{i2}, g_{i3}, rest) play the roles of M1..M4.
  const std::array<Letters, 4> blocks{Letters{ls[0]}, Letters{ls[1]}, Letters{ls[2]},
                                      slice(ls, 3, ls.size())};
  TracePoly out = rule_->rhs.substitute([&](SubsetVar t) -> std::optional<TracePoly> {
    GroupWord w(rank);
    for (int i : t.indices())
      for (const auto& l : blocks[static_cast<std::size_t>(i - 1)]) w.push_back(l);
    return reduce_canonical(cyclic_key(w).canonical());
  });
  out *= BigRational(1, 2);
  return out;
}

TracePoly reduce_trace(const GroupWord& w, ReductionMode mode) {
  TraceEngine engine(mode);
  return engine.reduce(w);
}

std::vector<SubsetVar> skein_basis_vars(int n, ReductionMode mode) {
  if (n < 1) throw std::invalid_argument("skein_basis_vars needs n >= 1");
  if (n > 63) throw std::invalid_argument("rank above 63 is not supported");
  std::vector<SubsetVar> out;
  if (mode == ReductionMode::integral) {
    if (n > 24) throw std::invalid_argument("2^n - 1 variables: rank too large to list");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) out.emplace_back(mask);
  } else {
    for (int i = 0; i < n; ++i) {
      out.emplace_back(std::uint64_t{1} << i);
      for (int j = i + 1; j < n; ++j) {
        out.emplace_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
        for (int l = j + 1; l < n; ++l)
          out.emplace_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j) | (std::uint64_t{1} << l));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skeinlab
