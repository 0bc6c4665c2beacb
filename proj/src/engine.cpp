#include "zcl/engine.hpp"

#include <sstream>
#include <stdexcept>

namespace zcl {

ClassVector expand(const ProductRing& pr, const FactorList& list) {
    ClassVector acc = pr.basis_class(0);  // unit tuple
    for (const auto& f : list.factors) {
        if (f.multiplicity < 1)
            throw std::invalid_argument("expand: factor multiplicity must be >= 1");
        for (unsigned i = 0; i < f.multiplicity && !acc.is_zero(); ++i)
            acc = pr.mul(acc, f.cls);
    }
    return acc;
}

Index family_power_index(const RingTable& factor, unsigned u, unsigned k) {
    const auto& fam = factor.family();
    if (!fam) throw std::invalid_argument("family_power_index: not a family ring");
    if (u < 1 || u > fam->g || k > fam->m)
        throw std::out_of_range("family_power_index: generator out of range");
    if (k == 0) return 0;
    if (k == fam->m) return static_cast<Index>(fam->g) * (fam->m - 1) + 1;
    return 1 + static_cast<Index>(k - 1) * fam->g + (u - 1);
}

namespace {

ClassVector slot_difference(const ProductRing& pr, unsigned u, unsigned i, unsigned j) {
    const ClassVector xu = pr.factor().basis_class(family_power_index(pr.factor(), u, 1));
    return add(pr.inject(i, xu), pr.inject(j, xu));
}

void require_witness_params(const ProductRing& pr) {
    const auto& fam = pr.factor().family();
    if (!fam || fam->g < 2 || fam->m < 2)
        throw std::invalid_argument("witness requires a family ring with g, m >= 2");
    if (pr.slots() < 3)
        throw std::invalid_argument("witness requires s >= 3");
}

}  // namespace

FactorList witness_factors(const ProductRing& pr) {
    require_witness_params(pr);
    const unsigned m = pr.factor().family()->m;
    const unsigned s = pr.slots();

    FactorList list;
    for (unsigned j = 2; j <= s; ++j)
        list.factors.push_back({slot_difference(pr, 1, 1, j), m});
    list.factors.push_back({slot_difference(pr, 2, 1, 2), m - 1});
    list.factors.push_back({slot_difference(pr, 2, 1, 3), 1});
    return list;
}

std::vector<StepRecord> witness_reduction_steps(const ProductRing& pr) {
    require_witness_params(pr);
    if (pr.slots() != 3)
        throw std::invalid_argument("witness_reduction_steps: s must be 3");
    const RingTable& factor = pr.factor();
    const unsigned m = factor.family()->m;

    // Explicit mod-2 binomial expansion of (x_{u,i} + x_{u,j})^n, built
    // directly from tuple encodings (no ring multiplication): the summand
    // x_{u,i}^k x_{u,j}^{n-k} survives exactly when C(n,k) is odd.
    auto binomial_expansion = [&](unsigned u, unsigned i, unsigned j,
                                  unsigned n) -> ClassVector {
        std::vector<Index> digits(pr.slots(), 0);
        std::vector<Index> terms;
        for (unsigned k = 0; k <= n; ++k) {
            if ((k & (n - k)) != 0) continue;  // C(n,k) mod 2, via Lucas
            digits.assign(pr.slots(), 0);
            digits[i - 1] = family_power_index(factor, u, k);
            digits[j - 1] = family_power_index(factor, u, n - k);
            terms.push_back(pr.encode(digits));
        }
        return {pr.id(), std::move(terms)};
    };

    auto power_class = [&](unsigned u, unsigned slot, unsigned k) {
        return pr.inject(slot, factor.basis_class(family_power_index(factor, u, k)));
    };

    const ClassVector witness = expand(pr, witness_factors(pr));

    const ClassVector bin_a = binomial_expansion(1, 1, 2, m);      // (x_{1,1}+x_{1,2})^m
    const ClassVector bin_b = binomial_expansion(1, 1, 3, m);      // (x_{1,1}+x_{1,3})^m
    const ClassVector bin_c = binomial_expansion(2, 1, 2, m - 1);  // (x_{2,1}+x_{2,2})^{m-1}
    const ClassVector last = slot_difference(pr, 2, 1, 3);         // x_{2,1}+x_{2,3}

    const ClassVector t2 = power_class(1, 2, m);
    const ClassVector t3 = power_class(1, 3, m);
    const ClassVector x21 = power_class(2, 1, 1);
    const ClassVector x21_pow = power_class(2, 1, m - 1);
    const ClassVector x21_top = power_class(2, 1, m);

    auto chain = [&](std::initializer_list<const ClassVector*> parts) {
        ClassVector acc = pr.basis_class(0);
        for (const ClassVector* p : parts) acc = pr.mul(acc, *p);
        return acc;
    };

    std::vector<StepRecord> steps;
    steps.push_back(
        {"slot3-top-extraction",
         "only the x_{1,3}^m summand of the second power factor can contribute "
         "the slot-3 top class",
         chain({&bin_a, &t3, &bin_c, &last}) == witness});
    steps.push_back({"relation-x13-x23",
                     "x_{1,3} x_{2,3} = 0 reduces the last factor to x_{2,1}",
                     chain({&bin_a, &t3, &bin_c, &x21}) == witness});
    steps.push_back({"relation-x11-x21",
                     "x_{1,1} x_{2,1} = 0 collapses the first power factor to "
                     "x_{1,2}^m",
                     chain({&t2, &t3, &bin_c, &x21}) == witness});
    steps.push_back({"relation-x12-x22",
                     "x_{1,2} x_{2,2} = 0 collapses the remaining sum to "
                     "x_{2,1}^{m-1}",
                     chain({&t2, &t3, &x21_pow, &x21}) == witness});

    const ClassVector top = pr.top_class();
    const ClassVector final_form = chain({&t2, &t3, &x21_top});
    steps.push_back({"top-class",
                     "x_{1,2}^m x_{1,3}^m x_{2,1}^m equals t_1 t_2 t_3, the top class",
                     final_form == top && witness == top});
    return steps;
}

}  // namespace zcl
