// Laurent polynomials in x_1^{+-1}, ..., x_n^{+-1} with rational coefficients.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "skeinlab/rational.hpp"

namespace skeinlab {

class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, BigRational>;

  explicit LaurentPoly(int rank = 1);
  static LaurentPoly constant(int rank, const BigRational& c);
  static LaurentPoly monomial(const Exponents& exponents, const BigRational& c = 1);

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRational coefficient(const Exponents& e) const;

  void add_term(const BigRational& c, const Exponents& e);

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(LaurentPoly p, const BigRational& c);

  bool operator==(const LaurentPoly& q) const { return rank_ == q.rank_ && terms_ == q.terms_; }

  // Image under x_i -> x_i^-1 for every i.
  LaurentPoly tau() const;

  BigRational evaluate(const std::vector<BigRational>& point) const;

 private:
  void check_rank(const LaurentPoly& q) const;

  int rank_;
  TermMap terms_;
};

LaurentPoly laurent_arith(const LaurentPoly& p, const LaurentPoly& q, ArithOp op);

// Invariant under tau: the coefficient at v equals the coefficient at -v.
bool is_symmetric(const LaurentPoly& p);

// x^v + x^-v.
LaurentPoly symmetric_monomial(const std::vector<long>& v);

std::string to_string(const LaurentPoly& p);

}  // namespace skeinlab
