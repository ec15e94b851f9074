#include "skeinlab/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace skeinlab {

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  BigRational t;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const BigRational inv = 1 / m[row][col];
    for (std::size_t j = col; j < m[row].size(); ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const BigRational f = m[r][col];
      for (std::size_t j = col; j < m[r].size(); ++j) {
        if (m[row][j] == 0) continue;
        t = f * m[row][j];
        m[r][j] -= t;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  return rref(m, cols).size();
}

SolveResult solve(const RationalMatrix& a, const std::vector<BigRational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug, cols + 1);
  SolveResult out;
  if (!pivots.empty() && pivots.back() == cols) {
    out.status = SolveStatus::inconsistent;
    return out;
  }
  if (pivots.size() < cols) {
    out.status = SolveStatus::underdetermined;
    return out;
  }
  out.status = SolveStatus::unique;
  out.x.resize(cols);
  for (std::size_t i = 0; i < cols; ++i) out.x[i] = aug[i][cols];
  return out;
}

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2).
  if (a % p == 0) throw std::domain_error("no inverse of 0 mod p");
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const BigRational& q, std::uint64_t p) {
  const BigInt modulus(static_cast<unsigned long>(p));
  BigInt n = q.get_num() % modulus;
  if (n < 0) n += modulus;
  BigInt d = q.get_den() % modulus;
  if (d == 0) throw std::domain_error("denominator vanishes mod p");
  return mul(static_cast<std::uint64_t>(n.get_ui()), inverse(d.get_ui(), p), p);
}

std::vector<std::vector<std::uint64_t>> nullspace(Matrix m, std::size_t cols, std::uint64_t p) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const std::uint64_t inv = inverse(m[row][col], p);
    for (std::size_t j = col; j < cols; ++j) m[row][j] = mul(m[row][j], inv, p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::uint64_t f = p - m[r][col];
      auto& target = m[r];
      const auto& source = m[row];
      for (std::size_t j = col; j < cols; ++j) {
        if (source[j] == 0) continue;
        target[j] = (target[j] + mul(f, source[j], p)) % p;
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      const std::uint64_t x = m[r][free];
      v[pivot_cols[r]] = x == 0 ? 0 : p - x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BigRational> reconstruct(std::uint64_t a, std::uint64_t p) {
  const BigInt modulus(static_cast<unsigned long>(p));
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), BigInt(modulus / 2).get_mpz_t());
  BigInt r0 = modulus, r1 = BigInt(static_cast<unsigned long>(a));
  BigInt s0 = 0, s1 = 1;
  while (r1 > bound) {
    const BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  BigRational out(r1, s1);
  out.canonicalize();
  return out;
}

}  // namespace modp

}  // namespace skeinlab
