#pragma once
#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "forts.hpp"
#include "graph.hpp"
#include "vertex_set.hpp"
#include "zero_forcing.hpp"

namespace fortlab {

/* Z(G) as a covering problem: a set forces everything iff it hits every
   fort. Rather than enumerating all minimal forts up front, forts are
   generated as violated constraints: solve the hitting-set relaxation
   exactly, and if the optimum does not force, the white leftovers of its
   closure contain a fort it missed. The relaxation optimum is a lower
   bound on Z(G) throughout, so the first optimum that forces is Z(G). */

struct FortCoverCertificate {
    FortCollection forts;    /* constraints present at termination */
    VertexSet hitting_set;   /* optimal hitting set; a minimum ZFS */
    int rounds = 0;          /* violated-fort extractions performed */
};

struct FortCoverResult {
    int zf_number = 0;
    FortCoverCertificate certificate;
};

/* (graph, stalled candidate) -> fort disjoint from the candidate */
using ViolatedFortExtractor =
    std::function<VertexSet(const Graph&, const VertexSet&)>;

/* Default extractor. The candidate must not force everything. Its closure
   is a failed set; grow it to a maximal failed set by offering each vertex
   once in ascending order (once an addition completes the forcing it stays
   that way, so a single pass reaches maximality). The complement of a
   maximal failed set is a minimal fort, and it avoids the candidate. */
inline VertexSet minimal_violated_fort(const Graph& g, const VertexSet& failed) {
    const int n = g.order();
    VertexSet s = closure(g, failed).closure;
    for (int x = 0; x < n; ++x) {
        if (s.contains(x)) continue;
        VertexSet grown = closure(g, s.with(x)).closure;
        if (!grown.is_full()) s = std::move(grown);
    }
    return s.complement();
}

namespace detail {

class HittingSetSolver {
public:
    HittingSetSolver(int universe, const std::vector<VertexSet>& sets)
        : n_(universe), sets_(sets) {}

    VertexSet solve() {
        best_ = greedy();
        VertexSet chosen(n_), banned(n_);
        std::vector<int> active(sets_.size());
        for (std::size_t i = 0; i < sets_.size(); ++i) active[i] = static_cast<int>(i);
        dfs(chosen, banned, active);
        return best_;
    }

private:
    VertexSet greedy() const {
        VertexSet chosen(n_);
        VertexSet nothing_banned(n_);
        std::vector<int> active(sets_.size());
        for (std::size_t i = 0; i < sets_.size(); ++i) active[i] = static_cast<int>(i);
        while (!active.empty()) {
            int v = pick_max_membership(active, nothing_banned);
            chosen.insert(v);
            std::erase_if(active,
                          [&](int i) { return sets_[static_cast<std::size_t>(i)].contains(v); });
        }
        return chosen;
    }

    int pick_max_membership(const std::vector<int>& active, const VertexSet& banned) const {
        int best_v = -1, best_m = -1;
        for (int v = 0; v < n_; ++v) {
            if (banned.contains(v)) continue;
            int m = 0;
            for (int i : active) m += sets_[static_cast<std::size_t>(i)].contains(v);
            if (m > best_m) {
                best_m = m;
                best_v = v;
            }
        }
        return best_v;
    }

    /* greedy count of pairwise disjoint active sets; any hitting set needs
       at least one fresh element per disjoint set */
    int disjoint_lower_bound(const std::vector<int>& active) const {
        VertexSet used(n_);
        int d = 0;
        for (int i : active) {
            if (!sets_[static_cast<std::size_t>(i)].intersects(used)) {
                used = used | sets_[static_cast<std::size_t>(i)];
                ++d;
            }
        }
        return d;
    }

    void dfs(VertexSet& chosen, VertexSet& banned, const std::vector<int>& active) {
        if (active.empty()) {
            if (chosen.count() < best_.count()) best_ = chosen;
            return;
        }
        if (chosen.count() + disjoint_lower_bound(active) >= best_.count()) return;
        for (int i : active)
            if (sets_[static_cast<std::size_t>(i)].is_subset_of(banned)) return;
        int v = pick_max_membership(active, banned);
        if (v == -1) return;

        std::vector<int> still;
        for (int i : active)
            if (!sets_[static_cast<std::size_t>(i)].contains(v)) still.push_back(i);
        chosen.insert(v);
        dfs(chosen, banned, still);
        chosen.erase(v);

        banned.insert(v);
        dfs(chosen, banned, active);
        banned.erase(v);
    }

    int n_;
    const std::vector<VertexSet>& sets_;
    VertexSet best_;
};

}  // namespace detail

/* Exact minimum hitting set over nonempty sets on {0..universe-1}. */
inline VertexSet min_hitting_set(int universe, const std::vector<VertexSet>& sets) {
    for (const auto& s : sets) {
        if (s.universe() != universe)
            throw std::invalid_argument("min_hitting_set: universe mismatch");
        if (s.empty()) throw std::invalid_argument("min_hitting_set: empty set is unhittable");
    }
    if (sets.empty()) return VertexSet(universe);
    return detail::HittingSetSolver(universe, sets).solve();
}

inline FortCoverResult zf_number_fortcover(const Graph& g,
                                           ViolatedFortExtractor extract = minimal_violated_fort) {
    if (g.order() < 1)
        throw std::invalid_argument("zf_number_fortcover: graph must have at least one vertex");
    const int n = g.order();
    std::vector<VertexSet> forts;
    int rounds = 0;
    for (;;) {
        VertexSet s = min_hitting_set(n, forts);
        if (is_zero_forcing_set(g, s)) {
            FortCoverResult r;
            r.zf_number = s.count();
            r.certificate.forts = FortCollection::from_sets(n, std::move(forts));
            r.certificate.hitting_set = std::move(s);
            r.certificate.rounds = rounds;
            return r;
        }
        ++rounds;
        VertexSet f = extract(g, s);
        if (!is_fort(g, f) || f.intersects(s))
            throw std::logic_error("zf_number_fortcover: extractor returned an invalid fort");
        forts.push_back(std::move(f));
    }
}

}  // namespace fortlab
