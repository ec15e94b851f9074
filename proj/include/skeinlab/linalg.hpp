// Exact linear algebra over Q and over Z/p for a 62-bit prime p.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skeinlab/rational.hpp"

namespace skeinlab {

using RationalMatrix = std::vector<std::vector<BigRational>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols);

std::size_t rank(RationalMatrix m);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<BigRational> x;  // filled when status == unique
};

// Solves A x = b exactly.
SolveResult solve(const RationalMatrix& a, const std::vector<BigRational>& b);

namespace modp {

// 2^62 - 57 and 2^62 - 87.
inline constexpr std::uint64_t kPrimary = 4611686018427387847ULL;
inline constexpr std::uint64_t kSecondary = 4611686018427387817ULL;

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
// Throws std::domain_error when the denominator vanishes mod p.
std::uint64_t reduce(const BigRational& q, std::uint64_t p);

using Matrix = std::vector<std::vector<std::uint64_t>>;

// Basis of {x : M x = 0 (mod p)}; the vector for free column f has a 1 in f
// and 0 in every other free column.
std::vector<std::vector<std::uint64_t>> nullspace(Matrix m, std::size_t cols, std::uint64_t p);

// Smallest n/d with n = d*a (mod p) and |n|, d <= sqrt(p/2); nullopt if none.
std::optional<BigRational> reconstruct(std::uint64_t a, std::uint64_t p);

}  // namespace modp

}  // namespace skeinlab
