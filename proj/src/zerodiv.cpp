#include "zcl/zerodiv.hpp"

#include <algorithm>
#include <stdexcept>

namespace zcl {

namespace {

/// s-fold factor product of the digits of one tuple. `cur`/`next` are
/// caller-provided scratch (parity buffers over the factor basis) so hot
/// loops do not reallocate.
void fold_tuple(const RingTable& factor, std::span<const Index> digits,
                std::vector<Index>& cur, std::vector<std::uint8_t>& parity,
                std::vector<Index>& next) {
    cur.assign(1, digits[0]);
    for (std::size_t j = 1; j < digits.size() && !cur.empty(); ++j) {
        std::fill(parity.begin(), parity.end(), 0);
        for (Index a : cur)
            for (Index t : factor.mul_basis(a, digits[j]).terms()) parity[t] ^= 1;
        next.clear();
        for (Index i = 0; i < factor.dim(); ++i)
            if (parity[i]) next.push_back(i);
        std::swap(cur, next);
    }
}

template <bool Parallel>
CupMatrix cup_map_impl(const ProductRing& pr, unsigned degree) {
    if (degree > pr.top_degree())
        throw std::out_of_range("cup_map: degree out of range");

    CupMatrix m;
    m.degree = degree;
    m.tuples = pr.component(degree);
    m.factor_cols = pr.factor().component(degree);

    std::vector<long long> col_of(pr.factor().dim(), -1);
    for (std::size_t c = 0; c < m.factor_cols.size(); ++c)
        col_of[m.factor_cols[c]] = static_cast<long long>(c);

    const auto& tuples = *m.tuples;
    m.bits = gf2::BitMatrix(tuples.size(), m.factor_cols.size());
    const RingTable& factor = pr.factor();
    const unsigned s = pr.slots();

#ifdef _OPENMP
#pragma omp parallel if (Parallel)
#endif
    {
        std::vector<Index> digits(s), cur, next;
        std::vector<std::uint8_t> parity(factor.dim());
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long r = 0; r < static_cast<long long>(tuples.size()); ++r) {
            pr.decode(tuples[r], digits);
            fold_tuple(factor, digits, cur, parity, next);
            for (Index t : cur) m.bits.set(static_cast<std::size_t>(r), col_of[t]);
        }
    }
    return m;
}

}  // namespace

CupMatrix cup_map_serial(const ProductRing& pr, unsigned degree) {
    return cup_map_impl<false>(pr, degree);
}

CupMatrix cup_map_parallel(const ProductRing& pr, unsigned degree) {
    return cup_map_impl<true>(pr, degree);
}

CupMatrix cup_map(const ProductRing& pr, unsigned degree) {
    if (degree <= pr.top_degree() && pr.component_dim(degree) >= 4096)
        return cup_map_parallel(pr, degree);
    return cup_map_serial(pr, degree);
}

const CupMatrix& CupMapCache::get(const ProductRing& pr, unsigned degree) {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(degree);
    if (it == cache_.end()) it = cache_.emplace(degree, cup_map(pr, degree)).first;
    return it->second;
}

KernelBasis kernel_basis(const ProductRing& pr, unsigned degree, CupMapCache* cache) {
    const CupMatrix* m;
    CupMatrix local;
    if (cache) {
        m = &cache->get(pr, degree);
    } else {
        local = cup_map(pr, degree);
        m = &local;
    }

    // Kernel of the map = nullspace of the transposed matrix (columns of the
    // transpose are the tuple images).
    gf2::BitMatrix a(m->cols(), m->rows());
    for (std::size_t r = 0; r < m->rows(); ++r)
        for (std::size_t c = 0; c < m->cols(); ++c)
            if (m->bits.get(r, c)) a.set(c, r);
    const std::size_t rk = gf2::rank(a);
    gf2::BitMatrix ns = gf2::nullspace(std::move(a));

    if (rk + ns.rows() != m->rows())
        throw std::logic_error("kernel_basis: rank-nullity violated");

    KernelBasis basis;
    basis.degree = degree;
    basis.vectors.reserve(ns.rows());
    const auto& tuples = *m->tuples;
    for (std::size_t v = 0; v < ns.rows(); ++v) {
        std::vector<Index> terms;
        for (std::size_t c = 0; c < ns.cols(); ++c)
            if (ns.get(v, c)) terms.push_back(tuples[c]);
        basis.vectors.emplace_back(pr.id(), std::move(terms));
    }
    return basis;
}

ClassVector cup_image(const ProductRing& pr, const ClassVector& c) {
    if (c.ring_id() != 0 && c.ring_id() != pr.id())
        throw std::invalid_argument("cup_image: ring mismatch");
    const RingTable& factor = pr.factor();
    std::vector<std::uint8_t> acc(factor.dim(), 0);
    std::vector<Index> digits(pr.slots()), cur, next;
    std::vector<std::uint8_t> parity(factor.dim());
    for (Index tuple : c.terms()) {
        pr.decode(tuple, digits);
        fold_tuple(factor, digits, cur, parity, next);
        for (Index t : cur) acc[t] ^= 1;
    }
    std::vector<Index> terms;
    for (Index i = 0; i < factor.dim(); ++i)
        if (acc[i]) terms.push_back(i);
    return {factor.id(), std::move(terms)};
}

bool is_zero_divisor(const ProductRing& pr, const ClassVector& c) {
    if (!pr.homogeneous_degree(c))
        throw std::invalid_argument("is_zero_divisor: class must be homogeneous");
    return cup_image(pr, c).is_zero();
}

}  // namespace zcl
