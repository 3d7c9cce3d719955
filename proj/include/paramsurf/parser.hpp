#pragma once

#include <string>
#include <vector>

#include "paramsurf/multipoly.hpp"

namespace paramsurf {

// Parse an expression over the declared variables into a MultiPoly.
// Grammar: +, -, *, ^, parentheses, integer and rational (a/b) literals, and
// the declared variable names. Implicit multiplication is rejected. Errors
// report a 1-based source position.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace paramsurf
