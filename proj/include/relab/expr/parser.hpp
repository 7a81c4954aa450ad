#pragma once

#include "relab/expr/ast.hpp"

#include <string>

namespace relab::expr {

// Throws ParseError (line and column of the offending token, 1-based) on bad syntax or
// on a variable index above `dimension`.
Ast parse(const std::string& text, int dimension);

}  // namespace relab::expr
