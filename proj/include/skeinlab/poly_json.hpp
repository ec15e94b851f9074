// JSON encoding of polynomials.
//
//   {"terms":[{"coeff":"-3/2","monomial":[{"subset":[1,2],"power":2}]}]}
//   {"rank":3,"terms":[{"coeff":"1","exponents":[1,-1,0]}]}
//
// Terms are written in descending graded-lex order so output is byte-stable.

#pragma once

#include "json.hpp"

#include "skeinlab/laurent.hpp"
#include "skeinlab/poly.hpp"

namespace skeinlab {

nlohmann::json to_json(const TracePoly& p);
TracePoly trace_poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(SubsetVar v);

}  // namespace skeinlab
