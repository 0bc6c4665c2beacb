#pragma once

#include <random>
#include <vector>

#include "zcl/engine.hpp"
#include "zcl/search.hpp"
#include "zcl/zerodiv.hpp"

namespace zcl::test {

/// Convolution power, the oracle for graded dimensions of tensor powers.
inline std::vector<std::uint64_t> poly_pow(const std::vector<std::uint64_t>& base,
                                           unsigned e) {
    std::vector<std::uint64_t> acc{1};
    for (unsigned i = 0; i < e; ++i) {
        std::vector<std::uint64_t> next(acc.size() + base.size() - 1, 0);
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; b < base.size(); ++b)
                next[a + b] += acc[a] * base[b];
        acc = std::move(next);
    }
    return acc;
}

/// Random nonzero homogeneous class with up to max_terms terms (zero class
/// if the component is empty).
inline ClassVector random_homogeneous(const ProductRing& pr, unsigned degree,
                                      std::mt19937_64& rng,
                                      std::size_t max_terms = 4) {
    const auto comp = pr.component(degree);
    if (comp->empty()) return pr.zero_class();
    std::uniform_int_distribution<std::size_t> pick(0, comp->size() - 1);
    std::uniform_int_distribution<std::size_t> count(1, max_terms);
    ClassVector c = pr.zero_class();
    for (std::size_t i = 0, n = count(rng); i < n; ++i) c.toggle((*comp)[pick(rng)]);
    if (c.is_zero()) c.toggle((*comp)[0]);
    return c;
}

/// Random nonzero GF(2) combination of a kernel basis.
inline ClassVector random_kernel_combo(const KernelBasis& kb, std::mt19937_64& rng) {
    ClassVector c;
    std::uniform_int_distribution<int> coin(0, 1);
    while (c.is_zero())
        for (const auto& v : kb.vectors)
            if (coin(rng)) c = add(c, v);
    return c;
}

/// Random list of verified zero-divisor factors with the requested total
/// length, drawn from kernel combinations of random positive degrees.
inline FactorList random_zero_divisor_list(const ProductRing& pr, unsigned total,
                                           std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> deg(1, pr.factor().top_degree());
    FactorList list;
    unsigned len = 0;
    while (len < total) {
        const KernelBasis kb = kernel_basis(pr, deg(rng));
        if (kb.vectors.empty()) continue;
        const ClassVector c = random_kernel_combo(kb, rng);
        std::uniform_int_distribution<unsigned> mult(1, total - len);
        const unsigned k = mult(rng);
        list.factors.push_back({c, k});
        len += k;
    }
    return list;
}

/// Independent maximum-length oracle: enumerates every factor multiset over
/// the pool up to max_len (non-decreasing indices) and records the longest
/// nonzero product. No pruning beyond the hard length cap.
inline unsigned brute_force_zcl(const ProductRing& pr,
                                const std::vector<PoolEntry>& pool,
                                unsigned max_len) {
    unsigned best = 0;
    std::vector<unsigned> stack;
    auto rec = [&](auto&& self, std::size_t start, const ClassVector& prod,
                   unsigned len) -> void {
        if (!prod.is_zero() && len > best) best = len;
        if (len == max_len) return;
        for (std::size_t j = start; j < pool.size(); ++j)
            self(self, j, pr.mul(prod, pool[j].cls), len + 1);
    };
    rec(rec, 0, pr.basis_class(0), 0);
    return best;
}

}  // namespace zcl::test
