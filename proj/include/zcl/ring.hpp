#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zcl {

using Index = std::uint64_t;

/// Thrown when a multiplication table fails the ring laws.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BasisElement {
    Index index = 0;
    unsigned degree = 0;
    std::string label;
};

/// A class in a ring: a GF(2) sum of basis elements, stored as the sorted
/// set of their indices. The empty set is the zero class. `ring_id` ties the
/// class to the ring it lives in; 0 marks a detached zero usable anywhere.
class ClassVector {
public:
    ClassVector() = default;
    ClassVector(std::uint64_t ring_id, std::vector<Index> terms);

    static ClassVector zero() { return {}; }

    std::uint64_t ring_id() const { return ring_id_; }
    const std::vector<Index>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Toggle one term (GF(2) addition of a single basis element).
    void toggle(Index i);

    bool operator==(const ClassVector& other) const {
        return terms_ == other.terms_;
    }

private:
    std::uint64_t ring_id_ = 0;
    std::vector<Index> terms_;
};

/// Symmetric difference of term sets; c + c = 0.
ClassVector add(const ClassVector& p, const ClassVector& q);

struct FamilyTag {
    unsigned g = 0;
    unsigned m = 0;
};

/// One nonzero product of positive-degree basis elements, a <= b.
/// Unordered pairs are listed once; everything unlisted is zero.
struct BasisProduct {
    Index a = 0;
    Index b = 0;
    std::vector<Index> terms;
};

/// A finite graded-commutative GF(2) algebra with unit, given by a full
/// multiplication table in normal form. Immutable after construction.
class RingTable {
public:
    /// Builds a ring from an explicit basis and the nonzero products of
    /// positive-degree pairs (symmetrized and completed with the unit law),
    /// then validates all ring laws.
    static RingTable from_parts(std::vector<BasisElement> basis,
                                const std::vector<BasisProduct>& products,
                                std::optional<FamilyTag> meta = std::nullopt);

    std::uint64_t id() const { return id_; }
    std::size_t dim() const { return basis_.size(); }
    unsigned top_degree() const { return top_degree_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& element(Index i) const { return basis_.at(i); }
    unsigned degree_of(Index i) const { return basis_[i].degree; }
    const std::string& label_of(Index i) const { return basis_[i].label; }
    std::optional<Index> index_of_label(const std::string& label) const;
    const std::optional<FamilyTag>& family() const { return meta_; }

    /// Normal-form product of two basis elements.
    const ClassVector& mul_basis(Index a, Index b) const;

    /// GF(2)-bilinear extension of mul_basis.
    ClassVector mul(const ClassVector& p, const ClassVector& q) const;

    ClassVector zero_class() const { return {id_, {}}; }
    ClassVector basis_class(Index i) const;
    /// Class of the basis element with this label.
    ClassVector cls(const std::string& label) const;

    /// True if all terms share one degree (the zero class counts as
    /// homogeneous); returns that degree for nonzero homogeneous classes.
    std::optional<unsigned> homogeneous_degree(const ClassVector& c) const;

    /// Basis indices of the given degree, in index order.
    std::vector<Index> component(unsigned degree) const;

    /// Coefficient k is dim of the degree-k part.
    std::vector<std::uint64_t> poincare_polynomial() const;

    /// Structural equality: same degrees, labels and table (ids ignored).
    bool same_presentation(const RingTable& other) const;

    bool has_unique_top() const;

private:
    RingTable() = default;
    void validate() const;

    std::uint64_t id_ = 0;
    unsigned top_degree_ = 0;
    std::vector<BasisElement> basis_;
    std::vector<ClassVector> table_;  // dim x dim, row-major
    std::optional<FamilyTag> meta_;
};

/// The mod-2 cohomology ring of the g-fold connected sum of real projective
/// m-space: generators x_1..x_g in degree 1 with x_u x_v = 0 for u != v,
/// x_u^{m+1} = 0, and all x_u^m equal to one top class t. Basis order is
/// 1, then x_u^k by (k, u), then t. g = 1 gives the truncated polynomial
/// ring of RP^m itself.
RingTable rp_sum_ring(unsigned g, unsigned m);

/// Re-runs the ring-law checks (unit, commutativity, degree homogeneity,
/// associativity on all basis triples); nullopt means all laws hold.
/// Construction already enforces this; the checker exists so callers can
/// re-verify independently.
std::optional<std::string> ring_law_violation(const RingTable& r);

/// Checks that the mod-2 intersection pairing H^k x H^(n-k) -> H^n is
/// perfect in every degree (and that the top component is one-dimensional).
bool is_poincare_duality(const RingTable& r);

/// Cohomology ring of a connected sum: positive-degree parts below the top
/// are summed, cross products vanish, and the two fundamental classes are
/// identified into a single top class. Inputs must be Poincare-duality rings
/// of the same top degree.
RingTable connected_sum(const RingTable& a, const RingTable& b);

/// True if the order-preserving per-degree bijection between the two bases
/// is a ring isomorphism. Labels are ignored.
bool canonically_isomorphic(const RingTable& a, const RingTable& b);

/// Renders a nonzero class as "l1+l2+..." in canonical index order ("0" when zero).
template <typename Ring>
std::string class_to_string(const Ring& r, const ClassVector& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c.terms().size(); ++i) {
        if (i) out += '+';
        out += r.label_of(c.terms()[i]);
    }
    return out;
}

}  // namespace zcl
