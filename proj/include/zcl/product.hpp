#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "zcl/ring.hpp"

namespace zcl {

/// The s-fold tensor power of a RingTable. Basis elements are s-tuples of
/// factor basis indices, encoded as mixed-radix integers with slot 1 as the
/// most significant digit, so integer order equals lexicographic tuple
/// order. Multiplication works slot by slot; no multiplication table is
/// materialized. Immutable after construction; the per-degree tuple lists
/// are cached on demand behind a mutex with single-assignment semantics.
class ProductRing {
public:
    ProductRing(RingTable factor, unsigned s);

    ProductRing(const ProductRing&) = delete;
    ProductRing& operator=(const ProductRing&) = delete;

    std::uint64_t id() const { return id_; }
    const RingTable& factor() const { return factor_; }
    unsigned slots() const { return s_; }
    unsigned top_degree() const { return top_degree_; }
    /// Total basis size (factor dim)^s.
    std::uint64_t dim() const { return dim_; }

    unsigned degree_of(Index tuple) const;
    /// Tuple rendered as "(l1,l2,...,ls)" from the factor labels.
    std::string label_of(Index tuple) const;

    Index encode(std::span<const Index> digits) const;
    void decode(Index tuple, std::span<Index> digits) const;

    ClassVector zero_class() const { return {id_, {}}; }
    ClassVector basis_class(Index tuple) const;

    /// Product of two basis tuples: per-slot factor products, distributed.
    ClassVector mul_tuple(Index a, Index b) const;
    /// GF(2)-bilinear product of classes.
    ClassVector mul(const ClassVector& p, const ClassVector& q) const;

    /// Pullback along slot j (1-based): factor element e goes to the tuple
    /// with e in slot j and the unit elsewhere.
    ClassVector inject(unsigned slot, const ClassVector& factor_class) const;

    /// The tuple (t,...,t) of the factor's top class; requires the factor
    /// top component to be one-dimensional.
    ClassVector top_class() const;

    std::optional<unsigned> homogeneous_degree(const ClassVector& c) const;

    /// All degree-d tuples in ascending encoded order (cached).
    std::shared_ptr<const std::vector<Index>> component(unsigned degree) const;
    /// dim of the degree-d part, from the s-th convolution power of the
    /// factor's Poincare polynomial.
    std::uint64_t component_dim(unsigned degree) const;
    const std::vector<std::uint64_t>& poincare_polynomial() const { return poincare_; }

private:
    void enumerate(unsigned slot, unsigned remaining, Index prefix,
                   std::vector<Index>& out) const;

    std::uint64_t id_ = 0;
    RingTable factor_;
    unsigned s_ = 0;
    unsigned top_degree_ = 0;
    std::uint64_t dim_ = 0;
    std::vector<Index> weights_;                    // weights_[j] for slot j+1
    std::vector<std::uint64_t> poincare_;
    std::vector<std::vector<Index>> factor_by_degree_;
    mutable std::mutex cache_mutex_;
    mutable std::vector<std::shared_ptr<const std::vector<Index>>> components_;
};

}  // namespace zcl
