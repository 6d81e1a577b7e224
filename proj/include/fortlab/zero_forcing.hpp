#pragma once
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "policy.hpp"
#include "vertex_set.hpp"

namespace fortlab {

/* Color-change rule: a gray vertex with exactly one white neighbor forces
   that neighbor gray. closure() runs this to a fixpoint. */

struct ClosureResult {
    VertexSet closure;                          /* final gray set */
    std::vector<std::pair<int, int>> forces;    /* (forcer, forced), in applied order */
};

/* Deterministic schedule: sweep gray vertices in ascending id, applying
   forces as found; repeat until a full sweep is quiet. The logged order is
   one witnessing order, and replaying it reproduces the closure. */
inline ClosureResult closure(const Graph& g, const VertexSet& start) {
    if (start.universe() != g.order())
        throw std::invalid_argument("closure: start set universe mismatch");
    ClosureResult r;
    r.closure = start;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u : r.closure) {
            VertexSet white = g.neighbors(u) - r.closure;
            if (white.count() == 1) {
                int v = white.first();
                r.closure.insert(v);
                r.forces.emplace_back(u, v);
                changed = true;
            }
        }
    }
    return r;
}

inline bool is_zero_forcing_set(const Graph& g, const VertexSet& s) {
    return closure(g, s).closure.is_full();
}

/* failed = the fixpoint leaves at least one white vertex */
inline bool is_failed_zfs(const Graph& g, const VertexSet& s) {
    return !is_zero_forcing_set(g, s);
}

/* failed, and adding any single outside vertex forces the whole graph */
inline bool is_maximal_failed_zfs(const Graph& g, const VertexSet& s) {
    if (!is_failed_zfs(g, s)) return false;
    for (int v : s.complement())
        if (!is_zero_forcing_set(g, s.with(v))) return false;
    return true;
}

namespace detail {

/* Word-sized closure for the enumeration inner loops (n <= 64). Same
   schedule as closure(); equivalence is pinned by tests. */
inline std::uint64_t closure_mask(const std::vector<std::uint64_t>& adj, int n,
                                  std::uint64_t start) {
    const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    std::uint64_t gray = start;
    bool changed = true;
    while (changed && gray != all) {
        changed = false;
        std::uint64_t scan = gray;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint64_t white = adj[static_cast<std::size_t>(u)] & ~gray;
            if (white && (white & (white - 1)) == 0) {
                gray |= white;
                changed = true;
            }
        }
    }
    return gray;
}

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u) adj[static_cast<std::size_t>(u)] = g.neighbors_mask(u);
    return adj;
}

/* next subset of the same popcount (Gosper); caller stops at wraparound */
inline std::uint64_t next_same_popcount(std::uint64_t x) {
    std::uint64_t c = x & (0 - x);
    std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

}  // namespace detail

/* Minimum size of a zero forcing set, by scanning subsets in increasing
   cardinality. Exact, exponential, capped by policy. */
inline int zf_number_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n > policy::kZfBruteforceMaxOrder)
        throw ResourceLimitError("zf_number_bruteforce: order " + std::to_string(n) +
                                 " exceeds policy cap " +
                                 std::to_string(policy::kZfBruteforceMaxOrder));
    if (n == 0) return 0;
    auto adj = detail::adjacency_masks(g);
    const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    for (int k = 0; k < n; ++k) {
        std::uint64_t s = (1ull << k) - 1;
        do {
            if (detail::closure_mask(adj, n, s) == all) return k;
            if (k == 0) break;
            s = detail::next_same_popcount(s);
        } while (s <= all);
    }
    return n;
}

}  // namespace fortlab
