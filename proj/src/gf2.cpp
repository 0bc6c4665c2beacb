#include "zcl/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zcl::gf2 {

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* pa = data_.data() + a * words_;
    std::uint64_t* pb = data_.data() + b * words_;
    for (std::size_t w = 0; w < words_; ++w) std::swap(pa[w], pb[w]);
}

namespace {

template <bool Parallel>
RrefResult rref_impl(BitMatrix& m) {
    RrefResult res;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t r = pivot_row;
        while (r < rows && !m.get(r, col)) ++r;
        if (r == rows) continue;
        m.swap_rows(r, pivot_row);
        if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (long long q = 0; q < static_cast<long long>(rows); ++q) {
                const auto qq = static_cast<std::size_t>(q);
                if (qq != pivot_row && m.get(qq, col)) m.xor_row(qq, pivot_row);
            }
        } else {
            for (std::size_t q = 0; q < rows; ++q)
                if (q != pivot_row && m.get(q, col)) m.xor_row(q, pivot_row);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

}  // namespace

RrefResult rref_serial(BitMatrix& m) { return rref_impl<false>(m); }

RrefResult rref_parallel(BitMatrix& m) { return rref_impl<true>(m); }

RrefResult rref(BitMatrix& m) {
    // Row elimination only pays off in parallel when there is real work per pivot.
    if (m.rows() >= 256 && m.words_per_row() >= 4) return rref_parallel(m);
    return rref_serial(m);
}

std::size_t rank(BitMatrix m) { return rref(m).rank; }

BitMatrix nullspace(const BitMatrix& a) {
    BitMatrix r = a;
    const RrefResult red = rref(r);
    const std::size_t cols = a.cols();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : red.pivot_cols) is_pivot[p] = true;

    const std::size_t dim = cols - red.rank;
    BitMatrix basis(dim, cols);
    std::size_t out = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        basis.set(out, f);
        for (std::size_t i = 0; i < red.rank; ++i)
            if (r.get(i, f)) basis.set(out, red.pivot_cols[i]);
        ++out;
    }
    return basis;
}

}  // namespace zcl::gf2
