#include "skeinlab/poly.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace skeinlab {

SubsetVar::SubsetVar(std::uint64_t mask) : mask_(mask) {
  if (mask == 0) throw std::invalid_argument("subset variable needs a nonempty subset");
}

SubsetVar SubsetVar::of(const std::vector<int>& indices) {
  std::uint64_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > 64) throw std::out_of_range("subset index out of range");
    if (mask >> (i - 1) & 1U) throw std::invalid_argument("repeated subset index");
    mask |= std::uint64_t{1} << (i - 1);
  }
  return SubsetVar(mask);
}

int SubsetVar::size() const { return std::popcount(mask_); }

std::vector<int> SubsetVar::indices() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

bool operator<(const SubsetVar& x, const SubsetVar& y) {
  const int cx = std::popcount(x.mask_);
  const int cy = std::popcount(y.mask_);
  if (cx != cy) return cx < cy;
  const std::uint64_t diff = x.mask_ ^ y.mask_;
  if (diff == 0) return false;
  // The set owning the lowest differing index is lexicographically smaller.
  return (x.mask_ & (diff & -diff)) != 0;
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  for (const auto& f : factors) {
    if (f.power == 0) continue;
    if (!factors_.empty() && factors_.back().var == f.var)
      factors_.back().power += f.power;
    else
      factors_.push_back(f);
    degree_ += f.power;
  }
}

Monomial Monomial::of(SubsetVar var, unsigned power) {
  return Monomial(std::vector<Factor>{{var, power}});
}

unsigned Monomial::power_of(SubsetVar var) const {
  for (const auto& f : factors_)
    if (f.var == var) return f.power;
  return 0;
}

unsigned Monomial::weight() const {
  unsigned w = 0;
  for (const auto& f : factors_) w += static_cast<unsigned>(f.var.size()) * f.power;
  return w;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.factors_.reserve(x.factors_.size() + y.factors_.size());
  auto i = x.factors_.begin();
  auto j = y.factors_.begin();
  while (i != x.factors_.end() && j != y.factors_.end()) {
    if (i->var == j->var) {
      out.factors_.push_back({i->var, i->power + j->power});
      ++i;
      ++j;
    } else if (i->var < j->var) {
      out.factors_.push_back(*i++);
    } else {
      out.factors_.push_back(*j++);
    }
  }
  out.factors_.insert(out.factors_.end(), i, x.factors_.end());
  out.factors_.insert(out.factors_.end(), j, y.factors_.end());
  out.degree_ = x.degree_ + y.degree_;
  return out;
}

bool grlex_less(const Monomial& x, const Monomial& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  const auto& a = x.factors();
  const auto& b = y.factors();
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].var == b[i].var) {
      if (a[i].power != b[i].power) return a[i].power < b[i].power;
      continue;
    }
    // The monomial carrying the smaller (more significant) variable is larger.
    return b[i].var < a[i].var;
  }
  return a.size() < b.size();
}

TracePoly TracePoly::constant(const BigRational& c) {
  TracePoly p;
  p.add_term(c, Monomial());
  return p;
}

TracePoly TracePoly::variable(SubsetVar var) {
  TracePoly p;
  p.add_term(1, Monomial::of(var));
  return p;
}

TracePoly TracePoly::term(const BigRational& c, Monomial m) {
  TracePoly p;
  p.add_term(c, m);
  return p;
}

bool TracePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

BigRational TracePoly::constant_term() const { return coefficient(Monomial()); }

BigRational TracePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

unsigned TracePoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::vector<SubsetVar> TracePoly::variables() const {
  std::set<SubsetVar> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.insert(f.var);
  return {vars.begin(), vars.end()};
}

void TracePoly::add_term(const BigRational& c, const Monomial& m) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TracePoly& TracePoly::operator+=(const TracePoly& q) {
  for (const auto& [m, c] : q.terms_) add_term(c, m);
  return *this;
}

TracePoly& TracePoly::operator-=(const TracePoly& q) {
  for (const auto& [m, c] : q.terms_) add_term(-c, m);
  return *this;
}

TracePoly& TracePoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

TracePoly operator*(const TracePoly& p, const TracePoly& q) {
  TracePoly out;
  BigRational prod;
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      mpq_mul(prod.get_mpq_t(), cp.get_mpq_t(), cq.get_mpq_t());
      out.add_term(prod, mp * mq);
    }
  }
  return out;
}

TracePoly TracePoly::operator-() const {
  TracePoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

TracePoly TracePoly::derivative(SubsetVar var) const {
  TracePoly out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.power_of(var);
    if (e == 0) continue;
    std::vector<Factor> fs;
    for (const auto& f : m.factors()) {
      if (f.var == var) {
        if (f.power > 1) fs.push_back({f.var, f.power - 1});
      } else {
        fs.push_back(f);
      }
    }
    out.add_term(c * e, Monomial(std::move(fs)));
  }
  return out;
}

TracePoly TracePoly::substitute(
    const std::function<std::optional<TracePoly>(SubsetVar)>& image) const {
  std::map<SubsetVar, std::optional<TracePoly>> images;
  auto lookup = [&](SubsetVar v) -> const std::optional<TracePoly>& {
    auto it = images.find(v);
    if (it == images.end()) it = images.emplace(v, image(v)).first;
    return it->second;
  };
  TracePoly out;
  for (const auto& [m, c] : terms_) {
    TracePoly term = TracePoly::constant(c);
    std::vector<Factor> kept;
    for (const auto& f : m.factors()) {
      const auto& img = lookup(f.var);
      if (img)
        term = term * pow(*img, f.power);
      else
        kept.push_back(f);
    }
    if (!kept.empty()) term = term * TracePoly::term(1, Monomial(std::move(kept)));
    out += term;
  }
  return out;
}

TracePoly pow(const TracePoly& p, unsigned exponent) {
  TracePoly result = TracePoly::constant(1);
  TracePoly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TracePoly poly_arith(const TracePoly& p, const TracePoly& q, ArithOp op) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

namespace {

// Lex order given by an explicit variable ranking.
struct LexOrder {
  std::vector<SubsetVar> ranking;

  std::vector<unsigned> exponents(const Monomial& m, std::vector<SubsetVar>& extra) const {
    std::vector<unsigned> e(ranking.size() + extra.size(), 0);
    for (const auto& f : m.factors()) {
      auto it = std::find(ranking.begin(), ranking.end(), f.var);
      if (it != ranking.end()) {
        e[static_cast<std::size_t>(it - ranking.begin())] = f.power;
        continue;
      }
      auto jt = std::find(extra.begin(), extra.end(), f.var);
      e[ranking.size() + static_cast<std::size_t>(jt - extra.begin())] = f.power;
    }
    return e;
  }
};

bool divides(const Monomial& d, const Monomial& m) {
  for (const auto& f : d.factors())
    if (m.power_of(f.var) < f.power) return false;
  return true;
}

Monomial quotient_monomial(const Monomial& m, const Monomial& d) {
  std::vector<Factor> fs;
  for (const auto& f : m.factors()) {
    const unsigned e = f.power - d.power_of(f.var);
    if (e > 0) fs.push_back({f.var, e});
  }
  return Monomial(std::move(fs));
}

}  // namespace

DivisionResult poly_divide(const TracePoly& p, const TracePoly& d,
                           const std::vector<SubsetVar>& var_order) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");

  LexOrder order{var_order};
  std::vector<SubsetVar> extra;
  for (const auto& v : p.variables())
    if (std::find(var_order.begin(), var_order.end(), v) == var_order.end()) extra.push_back(v);
  for (const auto& v : d.variables())
    if (std::find(var_order.begin(), var_order.end(), v) == var_order.end() &&
        std::find(extra.begin(), extra.end(), v) == extra.end())
      extra.push_back(v);
  std::sort(extra.begin(), extra.end());

  auto leading = [&](const TracePoly& f) {
    auto best = f.terms().begin();
    auto best_e = order.exponents(best->first, extra);
    for (auto it = std::next(best); it != f.terms().end(); ++it) {
      auto e = order.exponents(it->first, extra);
      if (e > best_e) {
        best = it;
        best_e = std::move(e);
      }
    }
    return *best;
  };

  const auto [lead_m, lead_c] = leading(d);
  DivisionResult out;
  TracePoly rest = p;
  while (!rest.is_zero()) {
    const auto [m, c] = leading(rest);
    if (divides(lead_m, m)) {
      const TracePoly t = TracePoly::term(c / lead_c, quotient_monomial(m, lead_m));
      out.quotient += t;
      rest -= t * d;
    } else {
      out.remainder.add_term(c, m);
      rest.add_term(-c, m);
    }
  }
  return out;
}

BigRational evaluate(const TracePoly& p, const Assignment& assignment) {
  return evaluate_in<BigRational>(
      p,
      [&](SubsetVar v) {
        auto it = assignment.find(v);
        if (it == assignment.end())
          throw std::out_of_range("no value assigned to " + var_name(v));
        return it->second;
      },
      [](const BigRational& c) { return c; });
}

std::string var_name(SubsetVar v, VarStyle style) {
  const auto idx = v.indices();
  auto bracket = [&](const char* prefix) {
    std::string s = prefix;
    s += '[';
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(idx[i]);
    }
    return s + ']';
  };
  if (style == VarStyle::trace) {
    if (idx.size() == 1) return "t" + std::to_string(idx[0]);
    return bracket("t");
  }
  if (idx.size() == 1) return "u" + std::to_string(idx[0]);
  if (idx.size() == 2) return bracket("v");
  return bracket("w");
}

std::string to_string(const TracePoly& p, VarStyle style) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const BigRational mag = negative ? BigRational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string body;
    for (const auto& f : m.factors()) {
      if (!body.empty()) body += '*';
      body += var_name(f.var, style);
      if (f.power != 1) body += "^" + std::to_string(f.power);
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
