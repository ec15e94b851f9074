#include "skeinlab/rational.hpp"

#include <stdexcept>

namespace skeinlab {

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && part.front() == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigRational q{BigInt(num), BigInt(den)};
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

bool is_dyadic(const BigRational& q) {
  const BigInt& d = q.get_den();
  // A positive integer is a power of two iff it has a single set bit.
  return mpz_popcount(d.get_mpz_t()) == 1;
}

BigRational pow(const BigRational& base, long exponent) {
  BigRational result = 1;
  BigRational b = base;
  if (exponent < 0) {
    if (b == 0) throw std::domain_error("zero to a negative power");
    b = 1 / b;
    exponent = -exponent;
  }
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace skeinlab
