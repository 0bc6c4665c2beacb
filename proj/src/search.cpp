#include "zcl/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>

namespace zcl {

namespace {

void atomic_max(std::atomic<unsigned>& target, unsigned value) {
    unsigned cur = target.load();
    while (cur < value && !target.compare_exchange_weak(cur, value)) {
    }
}

/// Depth-first walk over non-decreasing pool-index sequences. The pool is
/// sorted by degree, so both the degree cap and the optimistic length bound
/// allow breaking out of the candidate loop instead of scanning on.
class DepthFirst {
public:
    DepthFirst(const ProductRing& pr, const Pool& pool, unsigned max_len,
               unsigned degree_cap)
        : pr_(pr), pool_(pool), max_len_(max_len), degree_cap_(degree_cap) {}

    std::uint64_t node_budget = 0;  // 0 = unlimited
    bool budget_hit = false;
    std::atomic<unsigned>* shared_best = nullptr;  // value-only parallel phase

    unsigned best_len = 0;
    std::vector<unsigned> best_seq;

    void run(unsigned start, const ClassVector& prod, unsigned len, unsigned deg) {
        if (len + 1 > max_len_) return;
        for (unsigned j = start; j < pool_.entries.size(); ++j) {
            const unsigned d = pool_.entries[j].degree;
            if (deg + d > degree_cap_) break;
            const unsigned potential =
                std::min(max_len_, len + 1 + (degree_cap_ - deg - d) / d);
            if (potential <= view_best()) break;
            if (node_budget) {
                if (nodes_used_ >= node_budget) {
                    budget_hit = true;
                    return;
                }
                ++nodes_used_;
            }
            const ClassVector next = pr_.mul(prod, pool_.entries[j].cls);
            if (next.is_zero()) continue;
            cur_.push_back(j);
            if (len + 1 > best_len) {
                best_len = len + 1;
                best_seq = cur_;
                if (shared_best) atomic_max(*shared_best, best_len);
            }
            run(j, next, len + 1, deg + d);
            cur_.pop_back();
            if (budget_hit) return;
        }
    }

    /// First non-decreasing sequence of exactly `target` factors with a
    /// nonzero product; lexicographically smallest because candidates are
    /// tried in canonical order.
    bool retrieve(unsigned target, unsigned start, const ClassVector& prod,
                  unsigned len, unsigned deg) {
        if (len == target) {
            best_seq = cur_;
            best_len = len;
            return true;
        }
        for (unsigned j = start; j < pool_.entries.size(); ++j) {
            const unsigned d = pool_.entries[j].degree;
            if (deg + d > degree_cap_) break;
            // Remaining factors all have degree >= d.
            if (deg + d + (target - len - 1) * d > degree_cap_) break;
            const ClassVector next = pr_.mul(prod, pool_.entries[j].cls);
            if (next.is_zero()) continue;
            cur_.push_back(j);
            if (retrieve(target, j, next, len + 1, deg + d)) return true;
            cur_.pop_back();
        }
        return false;
    }

    void seed_first(unsigned j) { cur_.assign(1, j); }

private:
    unsigned view_best() const {
        return shared_best ? std::max(shared_best->load(), best_len) : best_len;
    }

    const ProductRing& pr_;
    const Pool& pool_;
    unsigned max_len_;
    unsigned degree_cap_;
    std::uint64_t nodes_used_ = 0;
    std::vector<unsigned> cur_;
};

FactorList sequence_to_factors(const Pool& pool, const std::vector<unsigned>& seq) {
    FactorList list;
    for (unsigned j : seq) {
        if (!list.factors.empty() &&
            list.factors.back().cls == pool.entries[j].cls)
            ++list.factors.back().multiplicity;
        else
            list.factors.push_back({pool.entries[j].cls, 1});
    }
    return list;
}

}  // namespace

Pool build_pool(const ProductRing& pr, PoolKind kind, std::uint64_t budget,
                CupMapCache* cache) {
    Pool pool;
    std::vector<unsigned> degrees;
    if (kind == PoolKind::Degree1) {
        if (pr.top_degree() >= 1) degrees.push_back(1);
    } else {
        for (unsigned d = 1; d <= pr.top_degree(); ++d) degrees.push_back(d);
    }
    for (unsigned d : degrees) {
        const KernelBasis kb = kernel_basis(pr, d, cache);
        const std::size_t k = kb.vectors.size();
        if (k == 0) continue;
        const std::uint64_t combos =
            (k >= 63) ? std::numeric_limits<std::uint64_t>::max()
                      : (std::uint64_t{1} << k) - 1;
        const std::uint64_t take = std::min(combos, budget);
        if (combos > budget) pool.truncated = true;
        for (std::uint64_t mask = 1; mask <= take; ++mask) {
            ClassVector c = pr.zero_class();
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::uint64_t{1} << b)) c = add(c, kb.vectors[b]);
            pool.entries.push_back({std::move(c), d});
        }
    }
    return pool;
}

SearchResult zcl_search(const ProductRing& pr, const SearchOptions& opts) {
    const unsigned degree_cap = pr.top_degree();
    const unsigned max_len =
        opts.max_len == 0 ? degree_cap
                          : std::min<unsigned>(opts.max_len, degree_cap);

    Pool pool = build_pool(pr, opts.pool, opts.pool_budget, opts.cache);

    std::vector<std::string> warnings;
    Strategy strategy = opts.strategy;
    if (pool.truncated) {
        std::ostringstream w;
        w << "kernel pool exceeded the budget of " << opts.pool_budget
          << " combinations per degree";
        if (strategy == Strategy::Exhaustive) {
            w << "; exhaustive search degraded to dfs";
            strategy = Strategy::Dfs;
        }
        warnings.push_back(w.str());
    }

    unsigned seed_len = 0;
    if (opts.seed && !expand(pr, *opts.seed).is_zero())
        seed_len = opts.seed->total_length();

    const ClassVector unit = pr.basis_class(0);
    std::vector<unsigned> found_seq;
    unsigned found_len = 0;
    bool budget_hit = false;

    if (strategy == Strategy::Greedy) {
        ClassVector acc = unit;
        unsigned len = 0, deg = 0;
        std::vector<unsigned> seq;
        for (unsigned j = 0; j < pool.entries.size(); ++j) {
            const unsigned d = pool.entries[j].degree;
            while (len < max_len && deg + d <= degree_cap) {
                const ClassVector next = pr.mul(acc, pool.entries[j].cls);
                if (next.is_zero()) break;
                acc = next;
                seq.push_back(j);
                ++len;
                deg += d;
            }
        }
        found_seq = std::move(seq);
        found_len = len;
    } else if (strategy == Strategy::Dfs) {
        DepthFirst walker(pr, pool, max_len, degree_cap);
        walker.node_budget = opts.node_budget;
        walker.best_len = seed_len;  // prune below the incumbent
        walker.run(0, unit, 0, 0);
        budget_hit = walker.budget_hit;
        if (walker.best_len > seed_len) {
            found_seq = walker.best_seq;
            found_len = walker.best_len;
        }
    } else {
        // Exhaustive, phase 1: the maximum length, branch-parallel with a
        // shared monotone bound (the max is schedule-independent).
        std::atomic<unsigned> best{seed_len};
        const auto entries = static_cast<long long>(pool.entries.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
#endif
        for (long long i = 0; i < entries; ++i) {
            const auto& entry = pool.entries[static_cast<std::size_t>(i)];
            if (entry.degree > degree_cap || max_len == 0) continue;
            const ClassVector first = pr.mul(unit, entry.cls);
            if (first.is_zero()) continue;
            DepthFirst walker(pr, pool, max_len, degree_cap);
            walker.shared_best = &best;
            walker.seed_first(static_cast<unsigned>(i));
            walker.best_len = 1;
            atomic_max(best, 1);
            walker.run(static_cast<unsigned>(i), first, 1, entry.degree);
        }
        // Phase 2: canonical witness for that length.
        const unsigned target = best.load();
        if (target > 0 && target >= seed_len) {
            DepthFirst walker(pr, pool, max_len, degree_cap);
            if (walker.retrieve(target, 0, unit, 0, 0)) {
                found_seq = walker.best_seq;
                found_len = target;
            }
        }
    }

    if (budget_hit)
        warnings.push_back("dfs node budget exhausted; the result is a lower bound");

    FactorList best_list;
    if (found_len >= seed_len && found_len > 0)
        best_list = sequence_to_factors(pool, found_seq);
    else if (seed_len > 0)
        best_list = *opts.seed;

    std::ostringstream note;
    note << "search: pool="
         << (opts.pool == PoolKind::Degree1 ? "std1" : "kernel")
         << " candidates=" << pool.entries.size() << " strategy="
         << (strategy == Strategy::Greedy
                 ? "greedy"
                 : (strategy == Strategy::Dfs ? "dfs" : "exhaustive"))
         << " max_len=" << max_len;

    SearchResult result;
    result.best = std::move(best_list);
    result.certificate =
        make_certificate(pr, result.best, {note.str()}, std::move(warnings));
    return result;
}

}  // namespace zcl
