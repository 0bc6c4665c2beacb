#pragma once

#include <cstdint>

#include "zcl/certificate.hpp"

namespace zcl {

enum class PoolKind {
    Degree1,     // all nonzero combinations of the degree-1 kernel basis
    FullKernel,  // combinations of the kernel basis of every degree
};

enum class Strategy {
    Greedy,      // single deterministic pass, lower bound
    Dfs,         // depth-first with a node budget, lower bound
    Exhaustive,  // complete search over the pool (restricted maximum)
};

struct SearchOptions {
    PoolKind pool = PoolKind::Degree1;
    Strategy strategy = Strategy::Exhaustive;
    /// Cap on the total product length; 0 means the degree bound s*top.
    unsigned max_len = 0;
    /// Cap on kernel combinations enumerated per degree. When it truncates
    /// the pool, an exhaustive run degrades to dfs and says so.
    std::uint64_t pool_budget = std::uint64_t{1} << 20;
    /// Node visit cap for the dfs strategy.
    std::uint64_t node_budget = std::uint64_t{1} << 22;
    /// Optional starting incumbent (e.g. a known witness).
    const FactorList* seed = nullptr;
    /// Optional cup-matrix cache shared across degrees.
    CupMapCache* cache = nullptr;
    /// Run the exhaustive phase over top-level branches in parallel. The
    /// result is schedule-independent either way.
    bool parallel = true;
};

struct PoolEntry {
    ClassVector cls;
    unsigned degree = 0;
};

/// Candidate factors: per degree, all nonzero GF(2) combinations of the
/// reduced-echelon kernel basis, in mask order (degrees ascending).
struct Pool {
    std::vector<PoolEntry> entries;
    bool truncated = false;
};

Pool build_pool(const ProductRing& pr, PoolKind kind, std::uint64_t budget,
                CupMapCache* cache = nullptr);

struct SearchResult {
    FactorList best;
    Certificate certificate;
};

/// Longest product of pool factors with nonzero expansion, as a
/// self-checking certificate. Exhaustive runs return the restricted maximum
/// and a canonical (lexicographically first) witness; greedy and dfs return
/// lower bounds.
SearchResult zcl_search(const ProductRing& pr, const SearchOptions& opts = {});

}  // namespace zcl
