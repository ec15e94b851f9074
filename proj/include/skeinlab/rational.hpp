// Arbitrary precision integers and rationals (GMP).

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace skeinlab {

using BigInt = mpz_class;
// mpq_class values produced by this library are always canonicalized:
// lowest terms, positive denominator, zero stored as 0/1.
using BigRational = mpq_class;

// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws on junk or q == 0.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

inline bool is_integral(const BigRational& q) { return q.get_den() == 1; }

// Denominator is a power of two (including 2^0).
bool is_dyadic(const BigRational& q);

BigRational pow(const BigRational& base, long exponent);

enum class ArithOp { add, sub, mul };

}  // namespace skeinlab
