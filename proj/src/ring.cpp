#include "zcl/ring.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "zcl/gf2.hpp"

namespace zcl {

namespace {

std::uint64_t next_ring_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

}  // namespace

ClassVector::ClassVector(std::uint64_t ring_id, std::vector<Index> terms)
    : ring_id_(ring_id), terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
    // Cancel repeated indices pairwise (coefficients live in GF(2)).
    std::vector<Index> reduced;
    reduced.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
        if ((j - i) % 2) reduced.push_back(terms_[i]);
        i = j;
    }
    terms_ = std::move(reduced);
}

void ClassVector::toggle(Index i) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), i);
    if (it != terms_.end() && *it == i)
        terms_.erase(it);
    else
        terms_.insert(it, i);
}

ClassVector add(const ClassVector& p, const ClassVector& q) {
    std::uint64_t id = p.ring_id();
    if (id == 0) id = q.ring_id();
    if (q.ring_id() != 0 && id != q.ring_id())
        throw std::invalid_argument("class addition: ring mismatch");
    std::vector<Index> out;
    out.reserve(p.terms().size() + q.terms().size());
    std::set_symmetric_difference(p.terms().begin(), p.terms().end(),
                                  q.terms().begin(), q.terms().end(),
                                  std::back_inserter(out));
    return {id, std::move(out)};
}

RingTable RingTable::from_parts(std::vector<BasisElement> basis,
                                const std::vector<BasisProduct>& products,
                                std::optional<FamilyTag> meta) {
    RingTable r;
    r.id_ = next_ring_id();
    r.basis_ = std::move(basis);
    r.meta_ = std::move(meta);

    const std::size_t n = r.basis_.size();
    if (n == 0) throw ValidationError("ring basis is empty");
    for (std::size_t i = 0; i < n; ++i) r.basis_[i].index = i;
    if (r.basis_[0].degree != 0 || r.basis_[0].label != "1")
        throw ValidationError("basis element 0 must be the unit '1' of degree 0");
    for (std::size_t i = 1; i < n; ++i)
        if (r.basis_[i].degree == 0)
            throw ValidationError("degree-0 element '" + r.basis_[i].label +
                                  "' other than the unit");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (r.basis_[i].label == r.basis_[j].label)
                throw ValidationError("duplicate label '" + r.basis_[i].label + "'");

    r.top_degree_ = 0;
    for (const auto& e : r.basis_) r.top_degree_ = std::max(r.top_degree_, e.degree);

    // Zero-initialized table, then the unit law and the listed products.
    r.table_.assign(n * n, ClassVector{r.id_, {}});
    for (std::size_t e = 0; e < n; ++e) {
        r.table_[e] = ClassVector{r.id_, {e}};          // 1 * e
        r.table_[e * n] = ClassVector{r.id_, {e}};      // e * 1
    }
    std::vector<bool> listed(n * n, false);
    for (const auto& p : products) {
        if (p.a >= n || p.b >= n)
            throw ValidationError("product index out of range");
        if (p.a == 0 || p.b == 0)
            throw ValidationError("products with the unit are implicit");
        if (p.a > p.b)
            throw ValidationError("product pairs must be listed with a <= b");
        if (listed[p.a * n + p.b])
            throw ValidationError("duplicate product for pair (" +
                                  r.basis_[p.a].label + ", " + r.basis_[p.b].label + ")");
        listed[p.a * n + p.b] = true;
        for (Index t : p.terms)
            if (t >= n) throw ValidationError("product term index out of range");
        ClassVector value{r.id_, p.terms};
        r.table_[p.a * n + p.b] = value;
        r.table_[p.b * n + p.a] = std::move(value);
    }

    r.validate();
    return r;
}

std::optional<Index> RingTable::index_of_label(const std::string& label) const {
    for (const auto& e : basis_)
        if (e.label == label) return e.index;
    return std::nullopt;
}

const ClassVector& RingTable::mul_basis(Index a, Index b) const {
    if (a >= dim() || b >= dim())
        throw std::out_of_range("mul_basis: index out of range");
    return table_[a * dim() + b];
}

ClassVector RingTable::mul(const ClassVector& p, const ClassVector& q) const {
    if ((p.ring_id() != 0 && p.ring_id() != id_) ||
        (q.ring_id() != 0 && q.ring_id() != id_))
        throw std::invalid_argument("class multiplication: ring mismatch");
    std::vector<std::uint8_t> parity(dim(), 0);
    for (Index a : p.terms())
        for (Index b : q.terms())
            for (Index t : table_[a * dim() + b].terms()) parity[t] ^= 1;
    std::vector<Index> out;
    for (Index i = 0; i < dim(); ++i)
        if (parity[i]) out.push_back(i);
    return {id_, std::move(out)};
}

ClassVector RingTable::basis_class(Index i) const {
    if (i >= dim()) throw std::out_of_range("basis_class: index out of range");
    return {id_, {i}};
}

ClassVector RingTable::cls(const std::string& label) const {
    auto i = index_of_label(label);
    if (!i) throw std::invalid_argument("unknown label '" + label + "'");
    return basis_class(*i);
}

std::optional<unsigned> RingTable::homogeneous_degree(const ClassVector& c) const {
    if (c.is_zero()) return 0;
    unsigned d = degree_of(c.terms().front());
    for (Index t : c.terms())
        if (degree_of(t) != d) return std::nullopt;
    return d;
}

std::vector<Index> RingTable::component(unsigned degree) const {
    std::vector<Index> out;
    for (const auto& e : basis_)
        if (e.degree == degree) out.push_back(e.index);
    return out;
}

std::vector<std::uint64_t> RingTable::poincare_polynomial() const {
    std::vector<std::uint64_t> coeff(top_degree_ + 1, 0);
    for (const auto& e : basis_) ++coeff[e.degree];
    return coeff;
}

bool RingTable::has_unique_top() const {
    return component(top_degree_).size() == 1;
}

bool RingTable::same_presentation(const RingTable& other) const {
    if (dim() != other.dim() || top_degree_ != other.top_degree_) return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (basis_[i].degree != other.basis_[i].degree ||
            basis_[i].label != other.basis_[i].label)
            return false;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (table_[i * dim() + j].terms() != other.table_[i * dim() + j].terms())
                return false;
    return true;
}

void RingTable::validate() const {
    if (const auto why = ring_law_violation(*this)) throw ValidationError(*why);
}

std::optional<std::string> ring_law_violation(const RingTable& r) {
    const std::size_t n = r.dim();
    // Unit law and commutativity.
    for (std::size_t e = 0; e < n; ++e) {
        if (r.mul_basis(0, e).terms() != std::vector<Index>{e})
            return "unit law fails on '" + r.label_of(e) + "'";
        for (std::size_t f = e; f < n; ++f)
            if (r.mul_basis(e, f).terms() != r.mul_basis(f, e).terms())
                return "commutativity fails on (" + r.label_of(e) + ", " +
                       r.label_of(f) + ")";
    }
    // Degree homogeneity: every term of a*b has degree deg(a)+deg(b). Since
    // basis degrees are capped by the top degree, this also forces products
    // above the top degree to vanish.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            const unsigned want = r.degree_of(a) + r.degree_of(b);
            for (Index t : r.mul_basis(a, b).terms())
                if (r.degree_of(t) != want) {
                    std::ostringstream msg;
                    msg << "degree inconsistency in " << r.label_of(a) << "*"
                        << r.label_of(b) << ": term " << r.label_of(t)
                        << " has degree " << r.degree_of(t) << ", expected "
                        << want;
                    return msg.str();
                }
        }
    // Associativity on all triples of positive-degree elements (triples
    // involving the unit hold by the unit law).
    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b)
            for (std::size_t c = 1; c < n; ++c) {
                const ClassVector left = r.mul(r.mul_basis(a, b), r.basis_class(c));
                const ClassVector right = r.mul(r.basis_class(a), r.mul_basis(b, c));
                if (!(left == right)) {
                    std::ostringstream msg;
                    msg << "associativity fails at (" << r.label_of(a) << ", "
                        << r.label_of(b) << ", " << r.label_of(c) << "): ("
                        << r.label_of(a) << "*" << r.label_of(b) << ")*"
                        << r.label_of(c) << " = " << class_to_string(r, left)
                        << " but " << r.label_of(a) << "*(" << r.label_of(b)
                        << "*" << r.label_of(c) << ") = "
                        << class_to_string(r, right);
                    return msg.str();
                }
            }
    return std::nullopt;
}

RingTable rp_sum_ring(unsigned g, unsigned m) {
    if (g < 1) throw std::invalid_argument("rp_sum_ring: g must be >= 1");
    if (m < 2) throw std::invalid_argument("rp_sum_ring: m must be >= 2");

    std::vector<BasisElement> basis;
    basis.push_back({0, 0, "1"});
    for (unsigned k = 1; k <= m - 1; ++k)
        for (unsigned u = 1; u <= g; ++u) {
            std::string label = "x" + std::to_string(u);
            if (k > 1) label += "^" + std::to_string(k);
            basis.push_back({0, k, std::move(label)});
        }
    const Index t = static_cast<Index>(g) * (m - 1) + 1;
    basis.push_back({0, m, "t"});

    auto xidx = [g](unsigned u, unsigned k) -> Index {
        return 1 + static_cast<Index>(k - 1) * g + (u - 1);
    };

    std::vector<BasisProduct> products;
    for (unsigned u = 1; u <= g; ++u)
        for (unsigned j = 1; j <= m - 1; ++j)
            for (unsigned k = j; k <= m - 1; ++k) {
                if (j + k > m) continue;
                const Index target = (j + k == m) ? t : xidx(u, j + k);
                products.push_back({xidx(u, j), xidx(u, k), {target}});
            }

    return RingTable::from_parts(std::move(basis), products, FamilyTag{g, m});
}

bool is_poincare_duality(const RingTable& r) {
    const unsigned n = r.top_degree();
    const auto top = r.component(n);
    if (top.size() != 1) return false;
    const Index top_idx = top[0];
    for (unsigned k = 0; k <= n; ++k) {
        const auto lhs = r.component(k);
        const auto rhs = r.component(n - k);
        if (lhs.size() != rhs.size()) return false;
        gf2::BitMatrix pairing(lhs.size(), rhs.size());
        for (std::size_t i = 0; i < lhs.size(); ++i)
            for (std::size_t j = 0; j < rhs.size(); ++j) {
                const auto& prod = r.mul_basis(lhs[i], rhs[j]).terms();
                if (std::binary_search(prod.begin(), prod.end(), top_idx))
                    pairing.set(i, j);
            }
        if (gf2::rank(std::move(pairing)) != lhs.size()) return false;
    }
    return true;
}

RingTable connected_sum(const RingTable& a, const RingTable& b) {
    const unsigned n = a.top_degree();
    if (n == 0 || b.top_degree() != n)
        throw std::invalid_argument("connected_sum: top-degree mismatch");
    if (!a.has_unique_top() || !b.has_unique_top())
        throw std::invalid_argument("connected_sum: top component not 1-dimensional");
    if (!is_poincare_duality(a) || !is_poincare_duality(b))
        throw std::invalid_argument("connected_sum: input fails Poincare duality");

    const Index top_a = a.component(n)[0];
    const Index top_b = b.component(n)[0];

    std::vector<BasisElement> basis;
    basis.push_back({0, 0, "1"});
    // Positive-degree parts below the top, first summand then second; their
    // labels get a summand suffix, the identified top class becomes "T".
    std::vector<Index> map_a(a.dim()), map_b(b.dim());
    const Index top_new = 1 + (a.dim() - 2) + (b.dim() - 2);
    auto place = [&](const RingTable& r, Index top_old, std::vector<Index>& map,
                     const char* suffix) {
        map[0] = 0;
        map[top_old] = top_new;
        for (Index i = 1; i < r.dim(); ++i) {
            if (i == top_old) continue;
            map[i] = basis.size();
            basis.push_back({0, r.degree_of(i), r.label_of(i) + suffix});
        }
    };
    place(a, top_a, map_a, "1");
    place(b, top_b, map_b, "2");
    basis.push_back({0, n, "T"});

    std::vector<BasisProduct> products;
    auto add_products = [&](const RingTable& r, Index top_old,
                            const std::vector<Index>& map) {
        for (Index i = 1; i < r.dim(); ++i) {
            if (i == top_old) continue;
            for (Index j = i; j < r.dim(); ++j) {
                if (j == top_old) continue;
                const auto& terms = r.mul_basis(i, j).terms();
                if (terms.empty()) continue;
                std::vector<Index> mapped;
                mapped.reserve(terms.size());
                for (Index t : terms) mapped.push_back(map[t]);
                products.push_back({map[i], map[j], std::move(mapped)});
            }
        }
    };
    add_products(a, top_a, map_a);
    add_products(b, top_b, map_b);

    return RingTable::from_parts(std::move(basis), products);
}

bool canonically_isomorphic(const RingTable& a, const RingTable& b) {
    if (a.dim() != b.dim() || a.top_degree() != b.top_degree()) return false;
    std::vector<Index> phi(a.dim());
    for (unsigned d = 0; d <= a.top_degree(); ++d) {
        const auto ca = a.component(d);
        const auto cb = b.component(d);
        if (ca.size() != cb.size()) return false;
        for (std::size_t i = 0; i < ca.size(); ++i) phi[ca[i]] = cb[i];
    }
    for (Index i = 0; i < a.dim(); ++i)
        for (Index j = 0; j < a.dim(); ++j) {
            std::vector<Index> mapped;
            for (Index t : a.mul_basis(i, j).terms()) mapped.push_back(phi[t]);
            std::sort(mapped.begin(), mapped.end());
            if (mapped != b.mul_basis(phi[i], phi[j]).terms()) return false;
        }
    return true;
}

}  // namespace zcl
