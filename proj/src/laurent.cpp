#include "skeinlab/laurent.hpp"

#include <stdexcept>

#include "skeinlab/poly.hpp"

namespace skeinlab {

LaurentPoly::LaurentPoly(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("Laurent polynomial rank must be >= 1");
}

LaurentPoly LaurentPoly::constant(int rank, const BigRational& c) {
  LaurentPoly p(rank);
  p.add_term(c, Exponents(static_cast<std::size_t>(rank), 0));
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponents& exponents, const BigRational& c) {
  LaurentPoly p(static_cast<int>(exponents.size()));
  p.add_term(c, exponents);
  return p;
}

BigRational LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void LaurentPoly::add_term(const BigRational& c, const Exponents& e) {
  if (static_cast<int>(e.size()) != rank_) throw std::invalid_argument("exponent vector rank mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_rank(const LaurentPoly& q) const {
  if (rank_ != q.rank_)
    throw std::invalid_argument("Laurent rank mismatch: " + std::to_string(rank_) + " vs " +
                                std::to_string(q.rank_));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  check_rank(q);
  for (const auto& [e, c] : q.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  check_rank(q);
  for (const auto& [e, c] : q.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  p.check_rank(q);
  LaurentPoly out(p.rank_);
  LaurentPoly::Exponents e(static_cast<std::size_t>(p.rank_));
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [eq, cq] : q.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      out.add_term(cp * cq, e);
    }
  }
  return out;
}

LaurentPoly operator*(LaurentPoly p, const BigRational& c) {
  if (c == 0) {
    p.terms_.clear();
    return p;
  }
  for (auto& [e, coeff] : p.terms_) coeff *= c;
  return p;
}

LaurentPoly LaurentPoly::tau() const {
  LaurentPoly out(rank_);
  for (const auto& [e, c] : terms_) {
    Exponents neg = e;
    for (auto& x : neg) x = -x;
    out.terms_.emplace(std::move(neg), c);
  }
  return out;
}

BigRational LaurentPoly::evaluate(const std::vector<BigRational>& point) const {
  if (static_cast<int>(point.size()) != rank_) throw std::invalid_argument("evaluation point rank mismatch");
  BigRational total = 0;
  for (const auto& [e, c] : terms_) {
    BigRational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) term *= pow(point[i], e[i]);
    total += term;
  }
  return total;
}

LaurentPoly laurent_arith(const LaurentPoly& p, const LaurentPoly& q, ArithOp op) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

bool is_symmetric(const LaurentPoly& p) { return p.tau() == p; }

LaurentPoly symmetric_monomial(const std::vector<long>& v) {
  LaurentPoly::Exponents pos(v.size()), neg(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    pos[i] = static_cast<int>(v[i]);
    neg[i] = -static_cast<int>(v[i]);
  }
  LaurentPoly out = LaurentPoly::monomial(pos);
  out.add_term(1, neg);
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigRational mag = negative ? BigRational(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string body;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += '*';
      body += "x" + std::to_string(i + 1);
      if (e[i] != 1) body += "^" + std::to_string(e[i]);
    }
    if (body.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += body;
    else
      out += to_string(mag) + "*" + body;
  }
  return out;
}

}  // namespace skeinlab
