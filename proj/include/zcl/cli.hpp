#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zcl/engine.hpp"

namespace zcl {

/// A factor-list expression over a product ring:
///   (x1,1+x1,2)^2*(x2,1+x2,2)
/// Each parenthesized sum lists injected factor-basis elements as
/// "<label>,<slot>"; an optional ^k sets the multiplicity; factors are
/// joined with '*'. Whitespace is allowed between tokens.
FactorList parse_factor_expression(const ProductRing& pr, const std::string& text);

/// Runs one CLI invocation (without the program name). Exit codes:
/// 0 success, 1 failed verification, 2 usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace zcl
