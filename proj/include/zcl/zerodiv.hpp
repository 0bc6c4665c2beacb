#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "zcl/gf2.hpp"
#include "zcl/product.hpp"

namespace zcl {

/// Degree-d component of the s-iterated cup-product map, as a bit matrix.
/// Row i is the normal-form product of the i-th degree-d tuple, expressed
/// over the degree-d factor basis elements listed in `factor_cols`.
struct CupMatrix {
    unsigned degree = 0;
    std::shared_ptr<const std::vector<Index>> tuples;  // row order
    std::vector<Index> factor_cols;                    // column order
    gf2::BitMatrix bits;

    std::size_t rows() const { return bits.rows(); }
    std::size_t cols() const { return bits.cols(); }
};

CupMatrix cup_map_serial(const ProductRing& pr, unsigned degree);
CupMatrix cup_map_parallel(const ProductRing& pr, unsigned degree);
/// Dispatches to the parallel builder for large components.
CupMatrix cup_map(const ProductRing& pr, unsigned degree);

/// Retains cup matrices across calls when repeated access per degree is
/// expected; without it each matrix is discarded after kernel extraction.
class CupMapCache {
public:
    const CupMatrix& get(const ProductRing& pr, unsigned degree);

private:
    std::mutex mutex_;
    std::map<unsigned, CupMatrix> cache_;
};

/// Independent vectors spanning the kernel of the cup map in one degree,
/// in reduced-echelon form over the canonical tuple order.
struct KernelBasis {
    unsigned degree = 0;
    std::vector<ClassVector> vectors;
};

KernelBasis kernel_basis(const ProductRing& pr, unsigned degree,
                         CupMapCache* cache = nullptr);

/// Image of a product-ring class under the cup map, as a factor-ring class.
ClassVector cup_image(const ProductRing& pr, const ClassVector& c);

/// True iff the cup map kills the class. Only homogeneous classes are
/// accepted.
bool is_zero_divisor(const ProductRing& pr, const ClassVector& c);

}  // namespace zcl
