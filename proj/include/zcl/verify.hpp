#pragma once

#include "zcl/search.hpp"

namespace zcl {

/// Mechanical check that TC_s(g#RP^m) = sm: builds the ring and its s-fold
/// power, verifies every witness factor is a zero divisor, expands the
/// witness product and compares it with the top class. On success the
/// certificate concludes "exact" with zcl_lower = dim_upper = sm; any failed
/// check yields a failure certificate naming the first violated step.
/// Requires g, m >= 2 and s >= 3.
Certificate verify_theorem(unsigned g, unsigned m, unsigned s);

struct TcBounds {
    unsigned lower = 0;
    unsigned upper = 0;
    Certificate certificate;
};

/// Best available sandwich zcl_s <= TC_s <= s*m for g >= 1, m >= 2, s >= 2:
/// the explicit witness inside the theorem range, an exhaustive degree-1
/// kernel search outside it.
TcBounds tc_bounds(unsigned g, unsigned m, unsigned s);

}  // namespace zcl
