#pragma once

#include <string>
#include <vector>

#include "zcl/product.hpp"
#include "zcl/zerodiv.hpp"

namespace zcl {

struct Factor {
    ClassVector cls;
    unsigned multiplicity = 1;
};

/// An ordered multiset of candidate zero-divisor factors.
struct FactorList {
    std::vector<Factor> factors;

    unsigned total_length() const {
        unsigned n = 0;
        for (const auto& f : factors) n += f.multiplicity;
        return n;
    }
};

/// Left-to-right product of all factors (with multiplicities), reducing to
/// normal form after every single multiplication. The empty product is the
/// unit.
ClassVector expand(const ProductRing& pr, const FactorList& list);

/// The explicit length-sm product of degree-1 zero divisors whose expansion
/// is the top class:
///   (x_{1,1}+x_{1,2})^m (x_{1,1}+x_{1,3})^m ... (x_{1,1}+x_{1,s})^m
///   (x_{2,1}+x_{2,2})^{m-1} (x_{2,1}+x_{2,3}).
/// Requires a family factor ring with g,m >= 2 and s >= 3.
FactorList witness_factors(const ProductRing& pr);

/// Basis index of x_u^k in a family ring (k = 0 gives the unit, k = m the
/// top class).
Index family_power_index(const RingTable& factor, unsigned u, unsigned k);

struct StepRecord {
    std::string name;
    std::string detail;
    bool holds = false;
};

/// Replays the s=3 collapse of the witness product as five checked
/// identities between fully expanded normal forms: the second power factor
/// collapses to the slot-3 top class, then the three cross relations
/// x_{1,3}x_{2,3} = x_{1,1}x_{2,1} = x_{1,2}x_{2,2} = 0 strip the remaining
/// sums, and the survivor is the top class. Requires s = 3 and a family
/// factor with g,m >= 2.
std::vector<StepRecord> witness_reduction_steps(const ProductRing& pr);

}  // namespace zcl
