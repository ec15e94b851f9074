// Character-variety computations: 2-bridge knot polynomials, relation
// harvesting among trace coordinates, and tangent dimensions at the trivial
// character.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "skeinlab/poly.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/words.hpp"

namespace skeinlab {

// ---- 2-bridge knots -------------------------------------------------------

// G = <a, b | wa = bw>, w = a^e1 b^en a^e2 b^e(n-1) ... a^en b^e1.
struct TwoBridgePresentation {
  std::vector<int> epsilons;
};

// "trefoil" -> [+1], "fig8" -> [+1, -1]. Throws std::invalid_argument.
TwoBridgePresentation two_bridge_preset(const std::string& name);

// Throws std::invalid_argument unless epsilons is nonempty with entries +-1.
GroupWord two_bridge_word(const TwoBridgePresentation& p);

// Raised when Q is not divisible by t1^2 - t[1,2] - 2.
class NonExactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Variables: t1 = [a], t[1,2] = [ab]; [b] has been identified with [a].
struct CharVarResult {
  TracePoly q;
  TracePoly phi;  // primitive; positive leading term, t[1,2] outranking t1
  BigRational phi_at_22;
  bool square_free = false;
};

// Q = P_w - P_{bwa^-1} with t2 := t1, Phi = Q / (t1^2 - t[1,2] - 2).
CharVarResult two_bridge_charpoly(const TwoBridgePresentation& p);

// Q computed with the roles of a and b exchanged (relation w'b = aw').
TracePoly two_bridge_swapped_q(const TwoBridgePresentation& p);

TracePoly abelian_factor();  // t1^2 - t[1,2] - 2

// Cross-check against explicit representations
//   a = [[l, 1], [0, 1/l]],  b = [[l, 0], [-c, 1/l]],  c = l^2 + l^-2 - y
// for several rational l and every root y of Phi(l + 1/l, y) of degree <= 2,
// working in Q(sqrt D) when the root is irrational.
struct RileyReport {
  std::size_t points = 0;            // (l, y) pairs with Phi = 0 examined
  std::size_t relation_holds = 0;    // of those, wa == bw exactly
  std::size_t nonabelian = 0;        // of those, ab != ba
  std::size_t controls = 0;          // shifted y with Q != 0
  std::size_t controls_rejected = 0; // of those, wa != bw
  std::size_t skipped = 0;           // l with deg_y Phi > 2 or Phi(l + 1/l, y) == 0
  bool passed() const {
    return points > 0 && relation_holds == points && nonabelian == points &&
           controls_rejected == controls;
  }
};

RileyReport riley_cross_check(const TwoBridgePresentation& p, const CharVarResult& r);

nlohmann::json to_json(const CharVarResult& r);

// ---- relation harvesting ---------------------------------------------------

struct GroupSpec {
  GroupKind kind = GroupKind::free_group;
  int n = 1;
};

// "free:3", "abelian:2". Throws std::invalid_argument.
GroupSpec parse_group_spec(const std::string& text);
std::string to_string(const GroupSpec& g);

// Canonical generators: t_S with |S| <= 3 for F_n, u_i and v_jk for Z^n.
std::vector<SubsetVar> harvest_generators(const GroupSpec& g);

// All monomials of degree <= degree in the given variables, ascending grlex.
std::vector<Monomial> monomials_up_to(const std::vector<SubsetVar>& vars, unsigned degree);

class HarvestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RelationBasis {
  GroupSpec group;
  unsigned degree_bound = 0;
  std::vector<SubsetVar> generators;
  std::vector<TracePoly> relations;  // primitive integer, positive leading coefficient
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
};

// Generator values at one random representation (free: SL2(Z) walk tuple;
// abelian: diagonal with random nonzero rational eigenvalues).
Assignment sample_generator_values(const GroupSpec& g, std::mt19937_64& stream);

// sample_count == 0 means 2 * #monomials + 16. Throws HarvestError if
// sample_count is below 2 * #monomials or if no prime yields relations that
// verify exactly.
RelationBasis harvest_relations(const GroupSpec& g, unsigned degree_bound,
                                std::size_t sample_count, std::uint64_t seed);

// Exact check on `count` representations drawn from substreams disjoint from
// those harvest_relations uses. Returns the number of (relation, sample)
// pairs that fail to vanish.
std::size_t verify_relations(const RelationBasis& b, std::size_t count, std::uint64_t seed);

nlohmann::json to_json(const RelationBasis& b);
RelationBasis relation_basis_from_json(const nlohmann::json& j);

struct TangentReport {
  std::size_t ambient_dim = 0;
  std::size_t jacobian_rank_at_chi0 = 0;
  std::size_t tangent_dim = 0;
  bool gradients_vanish = true;
};

// Jacobian of the relations at chi_0, where every generator equals 2.
TangentReport tangent_dim_at_trivial(const RelationBasis& b);

nlohmann::json to_json(const TangentReport& t);

// a1^2 + a2^2 + b^2 - a1 a2 b + constant_term with a1 = x + 1/x,
// a2 = y + 1/y and b = xy + 1/(xy), or b = x/y + y/x when other_pairing.
// True iff the substitution is the zero Laurent polynomial.
bool check_x_z2_identity(long constant_term = -4, bool other_pairing = false);

}  // namespace skeinlab
