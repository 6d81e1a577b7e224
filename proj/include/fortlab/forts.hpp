#pragma once
#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "policy.hpp"
#include "vertex_set.hpp"
#include "zero_forcing.hpp"

namespace fortlab {

/* A fort is a nonempty F with no outside vertex seeing exactly one member.
   Stalling the color-change rule is exactly having a fort left white, which
   is what makes these the covering constraints for zero forcing sets. */
inline bool is_fort(const Graph& g, const VertexSet& f) {
    if (f.universe() != g.order())
        throw std::invalid_argument("is_fort: vertex set universe mismatch");
    if (f.empty()) return false;
    for (int u : f.complement())
        if (g.neighbors(u).count_intersection(f) == 1) return false;
    return true;
}

/* Minimality via duality: F is a minimal fort iff V \ F is a maximal failed
   zero forcing set. */
inline bool is_minimal_fort(const Graph& g, const VertexSet& f) {
    if (f.universe() != g.order())
        throw std::invalid_argument("is_minimal_fort: vertex set universe mismatch");
    return is_maximal_failed_zfs(g, f.complement());
}

/* a contains some fort iff V \ a fails to force; one closure call */
inline bool contains_fort(const Graph& g, const VertexSet& a) {
    if (a.universe() != g.order())
        throw std::invalid_argument("contains_fort: vertex set universe mismatch");
    return !is_zero_forcing_set(g, a.complement());
}

/* Minimal forts, sorted by bit pattern, no duplicates. graph_order is kept
   so an empty collection still knows its universe. */
struct FortCollection {
    int graph_order = 0;
    std::vector<VertexSet> forts;

    static FortCollection from_sets(int graph_order, std::vector<VertexSet> sets) {
        for (const auto& s : sets) {
            if (s.universe() != graph_order)
                throw std::invalid_argument("FortCollection: universe mismatch");
            if (s.empty()) throw std::invalid_argument("FortCollection: empty member");
        }
        std::sort(sets.begin(), sets.end(),
                  [](const VertexSet& a, const VertexSet& b) { return bit_pattern_less(a, b); });
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        FortCollection c;
        c.graph_order = graph_order;
        c.forts = std::move(sets);
        return c;
    }

    std::size_t size() const { return forts.size(); }
    bool operator==(const FortCollection&) const = default;
};

/* no member contains another; trivially true for sets of minimal forts */
inline bool is_antichain(const FortCollection& c) {
    for (std::size_t i = 0; i < c.forts.size(); ++i)
        for (std::size_t j = 0; j < c.forts.size(); ++j)
            if (i != j && c.forts[i].is_subset_of(c.forts[j])) return false;
    return true;
}

namespace detail {

inline bool is_fort_mask(const std::vector<std::uint64_t>& adj, int n, std::uint64_t f) {
    if (!f) return false;
    const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    std::uint64_t outside = all & ~f;
    while (outside) {
        int u = std::countr_zero(outside);
        outside &= outside - 1;
        std::uint64_t hit = adj[static_cast<std::size_t>(u)] & f;
        if (hit && (hit & (hit - 1)) == 0) return false;
    }
    return true;
}

/* complement must be failed and unextendable; assumes f is already a fort
   (so the complement stalls immediately) */
inline bool is_minimal_fort_mask(const std::vector<std::uint64_t>& adj, int n, std::uint64_t f) {
    const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    std::uint64_t s = all & ~f;
    std::uint64_t probe = f;
    while (probe) {
        std::uint64_t w = probe & (0 - probe);
        probe &= probe - 1;
        if (closure_mask(adj, n, s | w) != all) return false;
    }
    return true;
}

}  // namespace detail

/* Reference enumerator: scan all nonempty subsets, keep forts, filter to
   the inclusion-minimal ones. Exponential on purpose; the cap keeps it in
   oracle territory. */
inline FortCollection enumerate_minimal_forts_oracle(const Graph& g) {
    const int n = g.order();
    if (n > policy::kFortOracleMaxOrder)
        throw ResourceLimitError("enumerate_minimal_forts_oracle: order " + std::to_string(n) +
                                 " exceeds oracle cap " +
                                 std::to_string(policy::kFortOracleMaxOrder));
    std::vector<VertexSet> out;
    if (n > 0) {
        auto adj = detail::adjacency_masks(g);
        std::vector<std::uint64_t> forts;
        const std::uint64_t all = (1ull << n) - 1;
        for (std::uint64_t f = 1; f <= all; ++f)
            if (detail::is_fort_mask(adj, n, f)) forts.push_back(f);
        std::sort(forts.begin(), forts.end(), [](std::uint64_t a, std::uint64_t b) {
            return std::popcount(a) < std::popcount(b);
        });
        std::vector<std::uint64_t> kept;
        for (auto f : forts) {
            bool minimal = true;
            for (auto k : kept) {
                if ((k & f) == k && k != f) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) kept.push_back(f);
        }
        out.reserve(kept.size());
        for (auto f : kept) out.push_back(VertexSet::from_mask(n, f));
    }
    return FortCollection::from_sets(n, std::move(out));
}

namespace detail {

/* DFS over vertex colors: gray = complement side, white = fort side, in
   ascending id order. A gray vertex may never end with exactly one white
   neighbor, which yields one conflict rule and two sound propagations:
     gray u, one white + one undecided neighbor -> that neighbor is white;
     gray u, no white + one undecided neighbor  -> that neighbor is gray.
   Leaves are exactly the forts; minimality is the closure test on the
   complement plus each single white vertex. */
class FortSearch {
public:
    FortSearch(const Graph& g, std::uint64_t budget)
        : n_(g.order()), adj_(adjacency_masks(g)), budget_(budget) {
        color_.assign(static_cast<std::size_t>(n_), kUndecided);
        white_cnt_.assign(static_cast<std::size_t>(n_), 0);
        undec_cnt_.assign(static_cast<std::size_t>(n_), 0);
        for (int u = 0; u < n_; ++u)
            undec_cnt_[static_cast<std::size_t>(u)] = g.degree(u);
    }

    std::vector<std::uint64_t> run() {
        if (n_ > 0) search(0);
        return std::move(found_);
    }

private:
    static constexpr std::int8_t kUndecided = 0, kGray = 1, kWhite = 2;

    void search(int hint) {
        if (++nodes_ > budget_)
            throw ResourceLimitError("search budget exhausted after " + std::to_string(budget_) +
                                     " nodes (raise FORTLAB_BUDGET or the per-call budget)");
        int v = hint;
        while (v < n_ && color_[static_cast<std::size_t>(v)] != kUndecided) ++v;
        if (v == n_) {
            harvest();
            return;
        }
        for (std::int8_t c : {kGray, kWhite}) {
            std::size_t mark = trail_.size();
            if (assign(v, c)) search(v + 1);
            undo_to(mark);
        }
    }

    void harvest() {
        std::uint64_t f = 0;
        for (int v = 0; v < n_; ++v)
            if (color_[static_cast<std::size_t>(v)] == kWhite) f |= 1ull << v;
        if (f && is_minimal_fort_mask(adj_, n_, f)) found_.push_back(f);
    }

    bool assign(int v0, std::int8_t c0) {
        queue_.clear();
        queue_.emplace_back(v0, c0);
        std::size_t qi = 0;
        while (qi < queue_.size()) {
            auto [v, c] = queue_[qi++];
            auto sv = static_cast<std::size_t>(v);
            if (color_[sv] != kUndecided) {
                if (color_[sv] == c) continue;
                return false;
            }
            color_[sv] = c;
            trail_.push_back(v);
            std::uint64_t nb = adj_[sv];
            while (nb) {
                int x = std::countr_zero(nb);
                nb &= nb - 1;
                auto sx = static_cast<std::size_t>(x);
                --undec_cnt_[sx];
                if (c == kWhite) ++white_cnt_[sx];
            }
            if (c == kGray && !recheck(v)) return false;
            nb = adj_[sv];
            while (nb) {
                int x = std::countr_zero(nb);
                nb &= nb - 1;
                if (color_[static_cast<std::size_t>(x)] == kGray && !recheck(x)) return false;
            }
        }
        return true;
    }

    bool recheck(int u) {
        auto su = static_cast<std::size_t>(u);
        if (white_cnt_[su] == 1) {
            if (undec_cnt_[su] == 0) return false;
            if (undec_cnt_[su] == 1) queue_.emplace_back(undecided_neighbor(u), kWhite);
        } else if (white_cnt_[su] == 0 && undec_cnt_[su] == 1) {
            queue_.emplace_back(undecided_neighbor(u), kGray);
        }
        return true;
    }

    int undecided_neighbor(int u) const {
        std::uint64_t nb = adj_[static_cast<std::size_t>(u)];
        while (nb) {
            int x = std::countr_zero(nb);
            nb &= nb - 1;
            if (color_[static_cast<std::size_t>(x)] == kUndecided) return x;
        }
        throw std::logic_error("FortSearch: undecided neighbor accounting is off");
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            auto sv = static_cast<std::size_t>(v);
            std::int8_t c = color_[sv];
            color_[sv] = kUndecided;
            std::uint64_t nb = adj_[sv];
            while (nb) {
                int x = std::countr_zero(nb);
                nb &= nb - 1;
                auto sx = static_cast<std::size_t>(x);
                ++undec_cnt_[sx];
                if (c == kWhite) --white_cnt_[sx];
            }
        }
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::int8_t> color_;
    std::vector<int> white_cnt_, undec_cnt_;
    std::vector<int> trail_;
    std::vector<std::pair<int, std::int8_t>> queue_;
    std::vector<std::uint64_t> found_;
};

}  // namespace detail

/* Production enumerator. Same output as the oracle, practical well past the
   oracle cap thanks to the propagation pruning. */
inline FortCollection enumerate_minimal_forts(
    const Graph& g, std::uint64_t node_budget = policy::kDefaultSearchBudget) {
    const int n = g.order();
    if (n > policy::kFortEnumMaxOrder)
        throw ResourceLimitError("enumerate_minimal_forts: order " + std::to_string(n) +
                                 " exceeds mask cap " + std::to_string(policy::kFortEnumMaxOrder));
    detail::FortSearch search(g, node_budget);
    auto masks = search.run();
    std::vector<VertexSet> sets;
    sets.reserve(masks.size());
    for (auto m : masks) sets.push_back(VertexSet::from_mask(n, m));
    return FortCollection::from_sets(n, std::move(sets));
}

/* largest number of minimal forts any one vertex sits in */
inline int max_fort_membership(const Graph& g,
                               std::uint64_t node_budget = policy::kDefaultSearchBudget) {
    FortCollection c = enumerate_minimal_forts(g, node_budget);
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        int m = 0;
        for (const auto& f : c.forts) m += f.contains(v);
        best = std::max(best, m);
    }
    return best;
}

/* number of minimal forts a given vertex belongs to */
inline int count_minimal_forts_containing(const Graph& g, int v,
                                          std::uint64_t node_budget = policy::kDefaultSearchBudget) {
    g.neighbors(v);
    FortCollection c = enumerate_minimal_forts(g, node_budget);
    int m = 0;
    for (const auto& f : c.forts) m += f.contains(v);
    return m;
}

inline BigInt sperner_bound(int n) {
    if (n < 0) throw std::invalid_argument("sperner_bound: negative order");
    return binomial(n, n / 2);
}

/* Degree criterion for "every c-subset is a fort", c one of floor(n/2) or
   ceil(n/2), on graphs with no isolated vertices and n >= 4. Up to the
   policy cap the criterion is also replayed subset-by-subset; the two
   routes disagreeing would mean a bug, not a data point. */
inline bool check_uniform_fort_threshold(const Graph& g, int c) {
    const int n = g.order();
    if (n < 4) throw std::invalid_argument("check_uniform_fort_threshold: requires n >= 4");
    if (min_degree(g) == 0)
        throw std::invalid_argument("check_uniform_fort_threshold: isolated vertex present");
    const int lo = n / 2, hi = (n + 1) / 2;
    if (c != lo && c != hi)
        throw std::invalid_argument("check_uniform_fort_threshold: c must be floor(n/2) or ceil(n/2)");
    const int need = (c == lo) ? hi + 1 : lo + 1;
    const bool by_degree = min_degree(g) >= need;
    if (n <= policy::kUniformThresholdExhaustiveMaxOrder) {
        auto adj = detail::adjacency_masks(g);
        bool exhaustive = true;
        const std::uint64_t all = (1ull << n) - 1;
        std::uint64_t s = (1ull << c) - 1;
        do {
            if (!detail::is_fort_mask(adj, n, s)) {
                exhaustive = false;
                break;
            }
            s = detail::next_same_popcount(s);
        } while (s <= all);
        if (exhaustive != by_degree)
            throw std::logic_error(
                "check_uniform_fort_threshold: degree criterion and exhaustive scan disagree");
    }
    return by_degree;
}

/* Constructive small fort for dense graphs: start from the first
   floor(n/2)-1 ids and repair via one of three cases (twin with an outside
   witness, twin with the unique inside neighbor, or swap u for v). The
   result is verified before returning. */
inline VertexSet construct_small_fort(const Graph& g) {
    const int n = g.order();
    if (n < 6) throw std::invalid_argument("construct_small_fort: requires n >= 6");
    const int need = (n + 1) / 2 + 1;
    if (min_degree(g) < need)
        throw std::invalid_argument("construct_small_fort: degree hypothesis not met (min degree " +
                                    std::to_string(min_degree(g)) + " < " + std::to_string(need) +
                                    ")");
    VertexSet s(n);
    for (int v = 0; v < n / 2 - 1; ++v) s.insert(v);

    VertexSet result(n);
    if (is_fort(g, s)) {
        result = s;
    } else {
        int u = -1, v = -1;
        for (int x : s.complement()) {
            if (g.neighbors(x).count_intersection(s) == 1) {
                u = x;
                v = (g.neighbors(x) & s).first();
                break;
            }
        }
        if (u == -1) throw std::logic_error("construct_small_fort: no witness for non-fort S");
        VertexSet shat = s.complement().without(u);
        int w = -1;
        for (int x : shat) {
            if ((g.neighbors(x) & s) == VertexSet(n).with(v)) {
                w = x;
                break;
            }
        }
        if (w != -1)
            result = VertexSet::of(n, {u, w});
        else if ((g.neighbors(v) & s).empty())
            result = VertexSet::of(n, {u, v});
        else
            result = s.without(v).with(u);
    }
    if (!is_fort(g, result) || result.count() >= n / 2)
        throw std::logic_error("construct_small_fort: produced set failed verification");
    return result;
}

/* For a tree, every pair inside a minimal fort sees an induced path between
   them, and the fort's trace on that path is a minimal fort of the path. */
struct TreePathReport {
    int pairs_checked = 0;
    bool all_pass = true;
};

inline TreePathReport check_tree_induced_path(const Graph& t, const VertexSet& f) {
    if (!is_tree(t)) throw std::invalid_argument("check_tree_induced_path: not a tree");
    if (!is_minimal_fort(t, f))
        throw std::invalid_argument("check_tree_induced_path: not a minimal fort");
    TreePathReport report;
    auto members = f.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            ++report.pairs_checked;
            auto path = tree_path(t, members[i], members[j]);
            VertexSet w = VertexSet::from_vector(t.order(), path);
            auto sub = induced_subgraph(t, w);
            bool ok = sub.graph.size() == sub.graph.order() - 1;
            for (std::size_t k = 0; ok && k + 1 < path.size(); ++k)
                ok = sub.graph.has_edge(sub.to_sub[static_cast<std::size_t>(path[k])],
                                        sub.to_sub[static_cast<std::size_t>(path[k + 1])]);
            if (ok) {
                VertexSet trace(sub.graph.order());
                for (int x : f & w) trace.insert(sub.to_sub[static_cast<std::size_t>(x)]);
                ok = is_minimal_fort(sub.graph, trace);
            }
            if (!ok) report.all_pass = false;
        }
    }
    return report;
}

}  // namespace fortlab
