// Gcd and square-freeness for polynomials in two variables over Q.

#pragma once

#include "skeinlab/poly.hpp"

namespace skeinlab {

// gcd of p and q in Q[x, y], normalized to a primitive integer polynomial
// with positive leading coefficient (grlex). Throws std::invalid_argument if
// p or q involves a variable other than x and y. gcd(0, 0) = 0.
TracePoly bivariate_gcd(const TracePoly& p, const TracePoly& q, SubsetVar x, SubsetVar y);

// True iff gcd(p, dp/dx, dp/dy) is a unit, i.e. p has no repeated factor.
// Zero is not square-free; nonzero constants are.
bool is_square_free(const TracePoly& p, SubsetVar x, SubsetVar y);

// Scales p to integer coefficients with gcd 1 and a positive leading
// coefficient in grlex order.
TracePoly primitive_normalize(const TracePoly& p);

}  // namespace skeinlab
