// The skein algebra S(G; R) at A = -1 for G = F_n and G = Z^n.
//
// Elements are stored as canonical polynomials: in subset traces t_S for the
// free group, and in u_i = [e_i], v_jk = [e_j + e_k] for the abelian group.

#pragma once

#include <string>

#include "skeinlab/laurent.hpp"
#include "skeinlab/poly.hpp"
#include "skeinlab/trace_engine.hpp"
#include "skeinlab/words.hpp"

namespace skeinlab {

enum class GroupKind { free_group, abelian };

struct SkeinElement {
  int rank = 1;
  ReductionMode mode = ReductionMode::integral;
  GroupKind kind = GroupKind::free_group;
  TracePoly poly;

  bool operator==(const SkeinElement&) const = default;
};

SkeinElement skein_constant(int rank, ReductionMode mode, GroupKind kind, const BigRational& c);

// [w] in S(F_n); equals engine.reduce(w).
SkeinElement from_word(TraceEngine& engine, const GroupWord& w);

// Product of canonical forms. Throws std::invalid_argument on a rank, mode or
// group mismatch.
SkeinElement multiply(const SkeinElement& x, const SkeinElement& y);

// [v] in S(Z^n). Dyadic mode writes x^v + x^-v in a_i = x_i + 1/x_i,
// b_i = x_i - 1/x_i, drops odd b-degree, and eliminates b's with
// b_i^2 = a_i^2 - 4 and b_j b_k = 2 v_jk - a_j a_k on sorted adjacent pairs.
// Integral mode reduces g_1^{v_1} ... g_n^{v_n} in F_n and reads t_S as [e_S].
SkeinElement abelian_from_vector(const AbelianVector& v,
                                 ReductionMode mode = ReductionMode::dyadic);

// Like multiply, but both factors must be abelian.
SkeinElement abelian_multiply(const SkeinElement& x, const SkeinElement& y);

// Image in R[x^+-1]^sym: [e_S] -> x^{e_S} + x^{-e_S}.
// Throws std::invalid_argument for free-group elements.
LaurentPoly to_laurent(const SkeinElement& x);

std::string to_string(const SkeinElement& x);

}  // namespace skeinlab
