#include "zcl/product.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

namespace zcl {

namespace {

std::uint64_t next_product_id() {
    // Product rings draw from their own id space; the top bit keeps it
    // disjoint from RingTable ids.
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1) | (std::uint64_t{1} << 63);
}

std::vector<std::uint64_t> convolve(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

ProductRing::ProductRing(RingTable factor, unsigned s)
    : id_(next_product_id()), factor_(std::move(factor)), s_(s) {
    if (s < 2) throw std::invalid_argument("ProductRing: s must be >= 2");
    const std::uint64_t b = factor_.dim();
    dim_ = 1;
    for (unsigned j = 0; j < s_; ++j) {
        if (dim_ > std::numeric_limits<std::uint64_t>::max() / 2 / b)
            throw std::invalid_argument("ProductRing: basis too large to index");
        dim_ *= b;
    }
    weights_.assign(s_, 1);
    for (unsigned j = s_; j-- > 1;) weights_[j - 1] = weights_[j] * b;
    top_degree_ = s_ * factor_.top_degree();

    poincare_ = factor_.poincare_polynomial();
    for (unsigned j = 1; j < s_; ++j)
        poincare_ = convolve(poincare_, factor_.poincare_polynomial());

    factor_by_degree_.resize(factor_.top_degree() + 1);
    for (const auto& e : factor_.basis()) factor_by_degree_[e.degree].push_back(e.index);

    components_.resize(top_degree_ + 1);
}

unsigned ProductRing::degree_of(Index tuple) const {
    unsigned d = 0;
    for (unsigned j = 0; j < s_; ++j) {
        d += factor_.degree_of(tuple / weights_[j]);
        tuple %= weights_[j];
    }
    return d;
}

std::string ProductRing::label_of(Index tuple) const {
    std::string out = "(";
    for (unsigned j = 0; j < s_; ++j) {
        if (j) out += ',';
        out += factor_.label_of(tuple / weights_[j]);
        tuple %= weights_[j];
    }
    out += ')';
    return out;
}

Index ProductRing::encode(std::span<const Index> digits) const {
    Index t = 0;
    for (unsigned j = 0; j < s_; ++j) t += digits[j] * weights_[j];
    return t;
}

void ProductRing::decode(Index tuple, std::span<Index> digits) const {
    for (unsigned j = 0; j < s_; ++j) {
        digits[j] = tuple / weights_[j];
        tuple %= weights_[j];
    }
}

ClassVector ProductRing::basis_class(Index tuple) const {
    if (tuple >= dim_) throw std::out_of_range("basis_class: tuple out of range");
    return {id_, {tuple}};
}

ClassVector ProductRing::mul_tuple(Index a, Index b) const {
    if (a >= dim_ || b >= dim_)
        throw std::out_of_range("mul_tuple: tuple out of range");
    std::vector<Index> da(s_), db(s_);
    decode(a, da);
    decode(b, db);

    // Per-slot factor products; the tuple product is their tensor.
    std::vector<std::span<const Index>> slot_terms(s_);
    for (unsigned j = 0; j < s_; ++j) {
        const auto& terms = factor_.mul_basis(da[j], db[j]).terms();
        if (terms.empty()) return zero_class();
        slot_terms[j] = terms;
    }

    std::vector<Index> out;
    std::vector<std::size_t> choice(s_, 0);
    for (;;) {
        Index t = 0;
        for (unsigned j = 0; j < s_; ++j) t += slot_terms[j][choice[j]] * weights_[j];
        out.push_back(t);
        unsigned j = s_;
        while (j-- > 0) {
            if (++choice[j] < slot_terms[j].size()) break;
            choice[j] = 0;
            if (j == 0) {
                std::sort(out.begin(), out.end());
                return {id_, std::move(out)};
            }
        }
    }
}

ClassVector ProductRing::mul(const ClassVector& p, const ClassVector& q) const {
    if ((p.ring_id() != 0 && p.ring_id() != id_) ||
        (q.ring_id() != 0 && q.ring_id() != id_))
        throw std::invalid_argument("class multiplication: ring mismatch");
    ClassVector acc = zero_class();
    for (Index a : p.terms())
        for (Index b : q.terms()) {
            const ClassVector prod = mul_tuple(a, b);
            for (Index t : prod.terms()) acc.toggle(t);
        }
    return acc;
}

ClassVector ProductRing::inject(unsigned slot, const ClassVector& factor_class) const {
    if (slot < 1 || slot > s_)
        throw std::out_of_range("inject: slot out of range");
    if (factor_class.ring_id() != 0 && factor_class.ring_id() != factor_.id())
        throw std::invalid_argument("inject: class does not live in the factor ring");
    std::vector<Index> terms;
    terms.reserve(factor_class.terms().size());
    for (Index f : factor_class.terms()) terms.push_back(f * weights_[slot - 1]);
    return {id_, std::move(terms)};
}

ClassVector ProductRing::top_class() const {
    if (!factor_.has_unique_top())
        throw std::invalid_argument(
            "top_class: factor top component is not 1-dimensional");
    const Index t = factor_.component(factor_.top_degree())[0];
    Index tuple = 0;
    for (unsigned j = 0; j < s_; ++j) tuple += t * weights_[j];
    return {id_, {tuple}};
}

std::optional<unsigned> ProductRing::homogeneous_degree(const ClassVector& c) const {
    if (c.is_zero()) return 0;
    const unsigned d = degree_of(c.terms().front());
    for (Index t : c.terms())
        if (degree_of(t) != d) return std::nullopt;
    return d;
}

void ProductRing::enumerate(unsigned slot, unsigned remaining, Index prefix,
                            std::vector<Index>& out) const {
    if (slot == s_) {
        if (remaining == 0) out.push_back(prefix);
        return;
    }
    const unsigned slots_left = s_ - slot - 1;
    const unsigned max_rest = slots_left * factor_.top_degree();
    // Last slot: direct lookup instead of scanning the whole basis.
    if (slots_left == 0) {
        if (remaining < factor_by_degree_.size())
            for (Index f : factor_by_degree_[remaining]) out.push_back(prefix + f);
        return;
    }
    for (const auto& e : factor_.basis()) {
        if (e.degree > remaining) continue;
        if (remaining - e.degree > max_rest) continue;
        enumerate(slot + 1, remaining - e.degree, prefix + e.index * weights_[slot], out);
    }
}

std::shared_ptr<const std::vector<Index>> ProductRing::component(unsigned degree) const {
    if (degree > top_degree_)
        throw std::out_of_range("component: degree out of range");
    {
        std::lock_guard lock(cache_mutex_);
        if (components_[degree]) return components_[degree];
    }
    auto fresh = std::make_shared<std::vector<Index>>();
    enumerate(0, degree, 0, *fresh);
    std::lock_guard lock(cache_mutex_);
    if (!components_[degree]) components_[degree] = std::move(fresh);
    return components_[degree];
}

std::uint64_t ProductRing::component_dim(unsigned degree) const {
    if (degree >= poincare_.size()) return 0;
    return poincare_[degree];
}

}  // namespace zcl
