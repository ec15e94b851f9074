// Sparse multivariate polynomials over the subset-trace variables t_S.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skeinlab/rational.hpp"

namespace skeinlab {

// t_S for a nonempty subset S of {1..64}, stored as a bitmask (bit i-1 <-> i).
// Ordered by cardinality, then lexicographically on the sorted index lists.
class SubsetVar {
 public:
  constexpr SubsetVar() = default;
  explicit SubsetVar(std::uint64_t mask);
  static SubsetVar of(const std::vector<int>& indices);

  std::uint64_t mask() const { return mask_; }
  int size() const;
  std::vector<int> indices() const;
  bool contains(int index) const { return (mask_ >> (index - 1)) & 1U; }

  bool operator==(const SubsetVar&) const = default;
  friend bool operator<(const SubsetVar& x, const SubsetVar& y);
  friend bool operator>(const SubsetVar& x, const SubsetVar& y) { return y < x; }

 private:
  std::uint64_t mask_ = 1;
};

struct Factor {
  SubsetVar var;
  unsigned power = 1;
  bool operator==(const Factor&) const = default;
};

// Product of variables with positive powers, factors sorted by SubsetVar order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(SubsetVar var, unsigned power = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  unsigned power_of(SubsetVar var) const;

  // Subscript weight: sum over factors of |S| * power.
  unsigned weight() const;

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

// Graded lexicographic order; smaller variables (t1 < t2 < t[1,2] ...) are
// the more significant ones, so t1^2 > t1*t2 > t2^2.
bool grlex_less(const Monomial& x, const Monomial& y);

struct GrlexLess {
  bool operator()(const Monomial& x, const Monomial& y) const { return grlex_less(x, y); }
};

class TracePoly {
 public:
  using TermMap = std::map<Monomial, BigRational, GrlexLess>;

  TracePoly() = default;
  static TracePoly constant(const BigRational& c);
  static TracePoly variable(SubsetVar var);
  static TracePoly term(const BigRational& c, Monomial m);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_term() const;
  BigRational coefficient(const Monomial& m) const;
  std::size_t size() const { return terms_.size(); }
  unsigned total_degree() const;
  std::vector<SubsetVar> variables() const;

  // Adds c*m, dropping the term if it cancels.
  void add_term(const BigRational& c, const Monomial& m);

  TracePoly& operator+=(const TracePoly& q);
  TracePoly& operator-=(const TracePoly& q);
  TracePoly& operator*=(const BigRational& c);
  friend TracePoly operator+(TracePoly p, const TracePoly& q) { return p += q; }
  friend TracePoly operator-(TracePoly p, const TracePoly& q) { return p -= q; }
  friend TracePoly operator*(const TracePoly& p, const TracePoly& q);
  friend TracePoly operator*(TracePoly p, const BigRational& c) { return p *= c; }
  friend TracePoly operator*(const BigRational& c, TracePoly p) { return p *= c; }
  TracePoly operator-() const;

  bool operator==(const TracePoly& q) const { return terms_ == q.terms_; }

  TracePoly derivative(SubsetVar var) const;
  // Replaces each variable for which `image` returns a value.
  TracePoly substitute(const std::function<std::optional<TracePoly>(SubsetVar)>& image) const;

 private:
  TermMap terms_;
};

TracePoly pow(const TracePoly& p, unsigned exponent);

TracePoly poly_arith(const TracePoly& p, const TracePoly& q, ArithOp op);

struct DivisionResult {
  TracePoly quotient;
  TracePoly remainder;
};

// Multivariate division with respect to the lexicographic order in which
// var_order[0] is the most significant variable. Variables not listed rank
// below all listed ones, in SubsetVar order. p == quotient*d + remainder.
DivisionResult poly_divide(const TracePoly& p, const TracePoly& d,
                           const std::vector<SubsetVar>& var_order);

using Assignment = std::map<SubsetVar, BigRational>;

// Throws std::out_of_range if a variable of p is not assigned.
BigRational evaluate(const TracePoly& p, const Assignment& assignment);

// Evaluation in any commutative ring with an int -> Ring embedding given by
// `from_rational`. `value_of` maps each variable to its image.
template <class Ring, class ValueOf, class FromRational>
Ring evaluate_in(const TracePoly& p, ValueOf&& value_of, FromRational&& from_rational) {
  std::map<SubsetVar, std::vector<Ring>> powers;
  auto power = [&](SubsetVar v, unsigned e) -> const Ring& {
    auto it = powers.find(v);
    if (it == powers.end()) {
      it = powers.emplace(v, std::vector<Ring>{from_rational(BigRational(1))}).first;
      it->second.push_back(value_of(v));
    }
    auto& table = it->second;
    while (table.size() <= e) table.push_back(table.back() * table[1]);
    return table[e];
  };
  Ring total = from_rational(BigRational(0));
  for (const auto& [m, c] : p.terms()) {
    Ring term = from_rational(c);
    for (const auto& f : m.factors()) term = term * power(f.var, f.power);
    total = total + term;
  }
  return total;
}

// Variable naming for printing.
enum class VarStyle {
  trace,    // t1, t[1,2]
  abelian,  // u1, v[1,2], w[1,2,3]
};

std::string var_name(SubsetVar v, VarStyle style = VarStyle::trace);
// Terms in descending graded-lex order, e.g. "t1*t2 - t[1,2]".
std::string to_string(const TracePoly& p, VarStyle style = VarStyle::trace);

}  // namespace skeinlab
