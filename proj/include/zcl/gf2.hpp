#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zcl::gf2 {

/// Dense bit matrix over GF(2). Rows are packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_(cols == 0 ? 1 : (cols + 63) / 64),
          data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        std::uint64_t& w = data_[r * words_ + c / 64];
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
    }

    std::span<std::uint64_t> row(std::size_t r) {
        return {data_.data() + r * words_, words_};
    }
    std::span<const std::uint64_t> row(std::size_t r) const {
        return {data_.data() + r * words_, words_};
    }

    /// rows[dst] ^= rows[src]
    void xor_row(std::size_t dst, std::size_t src) {
        std::uint64_t* d = data_.data() + dst * words_;
        const std::uint64_t* s = data_.data() + src * words_;
        for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b);

    bool row_is_zero(std::size_t r) const {
        const std::uint64_t* p = data_.data() + r * words_;
        for (std::size_t w = 0; w < words_; ++w)
            if (p[w]) return false;
        return true;
    }

    bool operator==(const BitMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 1;
    std::vector<std::uint64_t> data_;
};

struct RrefResult {
    std::vector<std::size_t> pivot_cols;  // ascending
    std::size_t rank = 0;
};

/// In-place reduction to reduced row echelon form. Pivot choice is the
/// lowest column index, so the result is the canonical RREF of the row space.
RrefResult rref_serial(BitMatrix& m);
/// OpenMP variant; produces the identical RREF (RREF is unique).
RrefResult rref_parallel(BitMatrix& m);
/// Dispatches on matrix size.
RrefResult rref(BitMatrix& m);

std::size_t rank(BitMatrix m);

/// Basis of {x : A x = 0}, one vector per row of the result, cols = A.cols().
/// Canonical form: one vector per free column f (ascending), with bit f set
/// and the pivot-column bits copied from the RREF.
BitMatrix nullspace(const BitMatrix& a);

}  // namespace zcl::gf2
