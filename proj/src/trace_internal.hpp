#pragma once

#include "polycert/trace.hpp"

namespace polycert {

/// A bare polynomial expression (the `expr` production) followed by end of input.
RawExpr parse_raw_expr(std::string_view text);

}  // namespace polycert
