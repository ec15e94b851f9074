#include "skeinlab/bivariate.hpp"

#include <stdexcept>
#include <vector>

namespace skeinlab {

namespace {

// Q[x], ascending coefficients, no trailing zeros.
using UPoly = std::vector<BigRational>;
// Q[x][y], ascending in y, no trailing zero coefficients.
using BPoly = std::vector<UPoly>;

void trim(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

void trim(BPoly& b) {
  while (!b.empty() && b.back().empty()) b.pop_back();
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

UPoly sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigRational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q*b + r; b nonzero.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1, BigRational(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const BigRational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly monic(UPoly u) {
  if (u.empty()) return u;
  const BigRational lead = u.back();
  for (auto& c : u) c /= lead;
  return u;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly content(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

BPoly divide(const BPoly& p, const UPoly& c) {
  BPoly out;
  for (const auto& coeff : p) {
    auto [q, r] = divmod(coeff, c);
    if (!r.empty()) throw std::logic_error("inexact content division");
    out.push_back(q);
  }
  return out;
}

BPoly primitive_part(const BPoly& p) {
  if (p.empty()) return p;
  return divide(p, content(p));
}

// lc(b)^k * a mod b, in y.
BPoly pseudo_remainder(BPoly a, const BPoly& b) {
  const UPoly& lc = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const UPoly lead = a.back();
    for (auto& c : a) c = mul(c, lc);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(lead, b[i]));
    trim(a);
  }
  return a;
}

BPoly gcd(BPoly a, BPoly b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  const UPoly g = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    BPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  BPoly out;
  for (const auto& c : a) out.push_back(mul(c, g));
  return out;
}

BPoly to_bpoly(const TracePoly& p, SubsetVar x, SubsetVar y) {
  BPoly out;
  for (const auto& [m, c] : p.terms()) {
    unsigned dx = 0, dy = 0;
    for (const auto& f : m.factors()) {
      if (f.var == x) dx = f.power;
      else if (f.var == y) dy = f.power;
      else throw std::invalid_argument("polynomial has a variable other than the two given");
    }
    if (out.size() <= dy) out.resize(dy + 1);
    if (out[dy].size() <= dx) out[dy].resize(dx + 1, BigRational(0));
    out[dy][dx] += c;
  }
  for (auto& u : out) trim(u);
  trim(out);
  return out;
}

TracePoly from_bpoly(const BPoly& b, SubsetVar x, SubsetVar y) {
  TracePoly out;
  for (std::size_t dy = 0; dy < b.size(); ++dy)
    for (std::size_t dx = 0; dx < b[dy].size(); ++dx) {
      std::vector<Factor> fs;
      if (dx > 0) fs.push_back({x, static_cast<unsigned>(dx)});
      if (dy > 0) fs.push_back({y, static_cast<unsigned>(dy)});
      out.add_term(b[dy][dx], Monomial(std::move(fs)));
    }
  return out;
}

}  // namespace

TracePoly primitive_normalize(const TracePoly& p) {
  if (p.is_zero()) return p;
  BigInt den = 1, num = 0;
  for (const auto& [m, c] : p.terms()) den = lcm(den, BigInt(c.get_den()));
  for (const auto& [m, c] : p.terms()) num = gcd(num, BigInt(c.get_num()));
  // Leading term is the grlex-largest, the last map entry.
  BigRational scale(den, num);
  scale.canonicalize();
  if (p.terms().rbegin()->second < 0) scale = -scale;
  return p * scale;
}

TracePoly bivariate_gcd(const TracePoly& p, const TracePoly& q, SubsetVar x, SubsetVar y) {
  return primitive_normalize(from_bpoly(gcd(to_bpoly(p, x, y), to_bpoly(q, x, y)), x, y));
}

bool is_square_free(const TracePoly& p, SubsetVar x, SubsetVar y) {
  if (p.is_zero()) return false;
  const TracePoly g = bivariate_gcd(bivariate_gcd(p, p.derivative(x), x, y), p.derivative(y), x, y);
  return g.is_constant() && !g.is_zero();
}

}  // namespace skeinlab
