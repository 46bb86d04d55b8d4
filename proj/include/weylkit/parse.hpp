#pragma once

#include <string>

#include "weylkit/comm_poly.hpp"
#include "weylkit/weyl_poly.hpp"

namespace weylkit {

// Grammar (both modes):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := VAR | 'sqrt2' | rational | '(' expr ')' | '-' factor
// Weyl mode uses the noncommuting X, Y; commutative mode uses x, y.
// Products keep their written order before normalization; implicit
// multiplication is rejected.
WeylPoly parse_weyl(const std::string& text);
CommPoly parse_comm(const std::string& text);

// Parses a Weyl-mode expression and requires a constant value.
Scalar parse_scalar(const std::string& text);

} // namespace weylkit
