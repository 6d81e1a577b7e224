#pragma once
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fort_cover.hpp"
#include "forts.hpp"
#include "graph.hpp"
#include "vertex_set.hpp"
#include "zero_forcing.hpp"

namespace fortlab {

/* Binary graph constructions with fixed labelings, plus the fort lifting
   rules they support. Labelings:
     join G v G':      G keeps 0..n-1, G' shifts by n
     corona G o G':    G keeps 0..n-1, copy of G' at base u occupies
                       n + u*n' .. n + (u+1)*n' - 1 in G'-id order
     vertex sum:       G keeps its ids (merged vertex stays at u);
                       V' \ {u'} appends after G in ascending id order
     cartesian G x G': (a, b) -> a*n' + b */

struct ProductGraph {
    Graph graph;
    std::vector<int> left_map;                       /* g id -> product id */
    std::vector<int> right_map;                      /* g' id -> product id (join, sum) */
    std::vector<std::vector<int>> right_copy_maps;   /* corona: [base u][g' id] */
    std::optional<int> merged_vertex;                /* vertex sum only */
};

inline ProductGraph join_graphs(const Graph& g, const Graph& gp) {
    const int n = g.order(), np = gp.order();
    ProductGraph out;
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : gp.edges()) edges.emplace_back(n + u, n + v);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < np; ++v) edges.emplace_back(u, n + v);
    out.graph = Graph(n + np, edges);
    out.left_map.resize(static_cast<std::size_t>(n));
    out.right_map.resize(static_cast<std::size_t>(np));
    for (int u = 0; u < n; ++u) out.left_map[static_cast<std::size_t>(u)] = u;
    for (int v = 0; v < np; ++v) out.right_map[static_cast<std::size_t>(v)] = n + v;
    return out;
}

inline ProductGraph corona(const Graph& g, const Graph& gp) {
    const int n = g.order(), np = gp.order();
    ProductGraph out;
    std::vector<std::pair<int, int>> edges = g.edges();
    out.right_copy_maps.assign(static_cast<std::size_t>(n), std::vector<int>());
    for (int u = 0; u < n; ++u) {
        int base = n + u * np;
        auto& cmap = out.right_copy_maps[static_cast<std::size_t>(u)];
        cmap.resize(static_cast<std::size_t>(np));
        for (int v = 0; v < np; ++v) cmap[static_cast<std::size_t>(v)] = base + v;
        for (auto [a, b] : gp.edges()) edges.emplace_back(base + a, base + b);
        for (int v = 0; v < np; ++v) edges.emplace_back(u, base + v);
    }
    out.graph = Graph(n + n * np, edges);
    out.left_map.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) out.left_map[static_cast<std::size_t>(u)] = u;
    return out;
}

inline ProductGraph vertex_sum(const Graph& g, int u, const Graph& gp, int up) {
    g.neighbors(u);
    gp.neighbors(up);
    const int n = g.order(), np = gp.order();
    ProductGraph out;
    out.left_map.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) out.left_map[static_cast<std::size_t>(x)] = x;
    out.right_map.assign(static_cast<std::size_t>(np), -1);
    out.right_map[static_cast<std::size_t>(up)] = u;
    int next = n;
    for (int x = 0; x < np; ++x)
        if (x != up) out.right_map[static_cast<std::size_t>(x)] = next++;
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [a, b] : gp.edges())
        edges.emplace_back(out.right_map[static_cast<std::size_t>(a)],
                           out.right_map[static_cast<std::size_t>(b)]);
    out.graph = Graph(n + np - 1, edges);
    out.merged_vertex = u;
    return out;
}

inline int cartesian_vertex_id(int a, int b, int n_right) { return a * n_right + b; }

inline ProductGraph cartesian(const Graph& g, const Graph& gp) {
    const int n = g.order(), np = gp.order();
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (auto [b, bp] : gp.edges())
            edges.emplace_back(cartesian_vertex_id(a, b, np), cartesian_vertex_id(a, bp, np));
    for (auto [a, ap] : g.edges())
        for (int b = 0; b < np; ++b)
            edges.emplace_back(cartesian_vertex_id(a, b, np), cartesian_vertex_id(ap, b, np));
    ProductGraph out;
    out.graph = Graph(n * np, edges);
    return out;
}

/* Minimal forts of a connected factor survive a join untouched. */
inline VertexSet lift_fort_join(const Graph& g, const Graph& gp, const VertexSet& f) {
    if (g.order() < 2 || !is_connected(g))
        throw std::invalid_argument("lift_fort_join: left factor must be connected of order >= 2");
    if (!is_minimal_fort(g, f))
        throw std::invalid_argument("lift_fort_join: not a minimal fort of the left factor");
    ProductGraph p = join_graphs(g, gp);
    VertexSet lifted(p.graph.order());
    for (int x : f) lifted.insert(p.left_map[static_cast<std::size_t>(x)]);
    if (!is_minimal_fort(p.graph, lifted))
        throw std::logic_error("lift_fort_join: lifted set is not a minimal fort");
    return lifted;
}

/* A minimal fort of the copied factor, placed inside any one corona copy,
   stays a minimal fort of the corona. One-vertex factor forts are the one
   genuine exception (only arise when the copy factor is disconnected), so
   the size bound is part of the precondition. */
inline VertexSet lift_fort_corona_copy(const Graph& g, const Graph& gp, int u,
                                       const VertexSet& fp) {
    g.neighbors(u);
    if (gp.order() < 2)
        throw std::invalid_argument("lift_fort_corona_copy: copy factor must have order >= 2");
    if (!is_minimal_fort(gp, fp))
        throw std::invalid_argument("lift_fort_corona_copy: not a minimal fort of the copy factor");
    if (fp.count() < 2)
        throw std::invalid_argument(
            "lift_fort_corona_copy: factor fort must have at least 2 vertices");
    ProductGraph p = corona(g, gp);
    VertexSet lifted(p.graph.order());
    for (int x : fp)
        lifted.insert(p.right_copy_maps[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)]);
    if (!is_minimal_fort(p.graph, lifted))
        throw std::logic_error("lift_fort_corona_copy: lifted set is not a minimal fort");
    return lifted;
}

/* Cycle-specific corona lift: pair every cycle vertex of the fort with one
   chosen vertex of its own copy. The image is always a fort of C_n o K_r,
   but with single-vertex copies (r = 1) it is not always minimal: a pendant
   can stand in for its base on the boundary, and once the cycle fort holds
   two or more adjacent pairs a strictly smaller fort hides inside the image.
   Smallest such case: n = 6, fort {0,1,3,4}, whose image contains the fort
   {1,3} plus all four pendants. The final check rejects those inputs instead
   of returning a non-minimal set; every r >= 2 case observed passes. The
   analogous move on a ladder base also fails, so no wider base family is
   accepted. */
inline VertexSet lift_fort_corona_cycle(int n, int r, const VertexSet& f,
                                        const std::map<int, int>& pick) {
    if (n < 3) throw std::invalid_argument("lift_fort_corona_cycle: cycle needs n >= 3");
    if (r < 1) throw std::invalid_argument("lift_fort_corona_cycle: complete copy needs r >= 1");
    if (f.universe() != n)
        throw std::invalid_argument("lift_fort_corona_cycle: fort universe must be the cycle");
    std::vector<std::pair<int, int>> cycle_edges;
    for (int i = 0; i + 1 < n; ++i) cycle_edges.emplace_back(i, i + 1);
    cycle_edges.emplace_back(0, n - 1);
    Graph cyc(n, cycle_edges);
    if (!is_minimal_fort(cyc, f))
        throw std::invalid_argument("lift_fort_corona_cycle: not a minimal fort of the cycle");
    std::vector<std::pair<int, int>> kr_edges;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) kr_edges.emplace_back(a, b);
    Graph kr(r, kr_edges);
    ProductGraph p = corona(cyc, kr);
    VertexSet lifted(p.graph.order());
    for (int i : f) {
        auto it = pick.find(i);
        if (it == pick.end())
            throw std::invalid_argument("lift_fort_corona_cycle: missing pick for cycle vertex " +
                                        std::to_string(i));
        if (it->second < 0 || it->second >= r)
            throw std::invalid_argument("lift_fort_corona_cycle: pick out of range for vertex " +
                                        std::to_string(i));
        lifted.insert(i);
        lifted.insert(
            p.right_copy_maps[static_cast<std::size_t>(i)][static_cast<std::size_t>(it->second)]);
    }
    for (const auto& [i, j] : pick)
        if (!f.contains(i))
            throw std::invalid_argument("lift_fort_corona_cycle: pick for non-member vertex " +
                                        std::to_string(i));
    if (!is_minimal_fort(p.graph, lifted))
        throw std::logic_error("lift_fort_corona_cycle: lifted set is not a minimal fort");
    return lifted;
}

struct CombinedFort {
    ProductGraph product;
    VertexSet fort;
    bool minimal = false;
};

/* Gluing two factor forts through the identified vertex always yields a
   fort of the sum; it is minimal exactly when dropping the glue vertex
   leaves nothing fort-like behind. */
inline CombinedFort combine_forts_vertex_sum(const Graph& g, int u, const Graph& gp, int up,
                                             const VertexSet& f, const VertexSet& fp) {
    if (!is_minimal_fort(g, f))
        throw std::invalid_argument("combine_forts_vertex_sum: left set is not a minimal fort");
    if (!is_minimal_fort(gp, fp))
        throw std::invalid_argument("combine_forts_vertex_sum: right set is not a minimal fort");
    if (!f.contains(u))
        throw std::invalid_argument("combine_forts_vertex_sum: u must belong to the left fort");
    if (!fp.contains(up))
        throw std::invalid_argument("combine_forts_vertex_sum: u' must belong to the right fort");
    CombinedFort out;
    out.product = vertex_sum(g, u, gp, up);
    VertexSet hat(out.product.graph.order());
    for (int x : f.without(u)) hat.insert(out.product.left_map[static_cast<std::size_t>(x)]);
    for (int x : fp.without(up)) hat.insert(out.product.right_map[static_cast<std::size_t>(x)]);
    hat.insert(*out.product.merged_vertex);
    if (!is_fort(out.product.graph, hat))
        throw std::logic_error("combine_forts_vertex_sum: combined set is not a fort");
    out.minimal = !contains_fort(out.product.graph, hat.without(*out.product.merged_vertex));
    out.fort = std::move(hat);
    return out;
}

/* All minimal forts of the windmill Wd(r, k), written directly from the
   blade structure: the center plus one non-center vertex per blade, or any
   two non-center vertices of one blade. Center 0; blade b occupies
   1 + b(r-1) .. (b+1)(r-1). */
inline FortCollection windmill_minimal_forts(int r, int k) {
    if (r < 3) throw std::invalid_argument("windmill_minimal_forts: requires r >= 3");
    if (k < 2) throw std::invalid_argument("windmill_minimal_forts: requires k >= 2");
    const int per = r - 1;
    const int n = k * per + 1;
    std::vector<VertexSet> sets;
    std::vector<int> choice(static_cast<std::size_t>(k), 0);
    for (;;) {
        VertexSet f(n);
        f.insert(0);
        for (int b = 0; b < k; ++b)
            f.insert(1 + b * per + choice[static_cast<std::size_t>(b)]);
        sets.push_back(std::move(f));
        int i = k - 1;
        while (i >= 0 && choice[static_cast<std::size_t>(i)] == per - 1)
            choice[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++choice[static_cast<std::size_t>(i)];
    }
    for (int b = 0; b < k; ++b)
        for (int a = 0; a < per; ++a)
            for (int c = a + 1; c < per; ++c)
                sets.push_back(VertexSet::of(n, {1 + b * per + a, 1 + b * per + c}));
    return FortCollection::from_sets(n, std::move(sets));
}

struct CartesianBoundReport {
    int zf_left = 0;
    int zf_right = 0;
    int zf_product = 0;
    int delta = 0;           /* max minimal-fort membership in the right factor */
    double bound_nat = 0;    /* natural log, the reading the checks use */
    double bound_log2 = 0;
    double bound_log10 = 0;
    bool holds = false;
};

/* Z(G x G') >= Z(G)Z(G')/(1 + log Delta) + 1 for non-empty factors. The
   log base is not pinned by the inequality's source, so all three common
   readings are reported; `holds` refers to the natural-log bound. */
inline CartesianBoundReport cartesian_zf_bound_check(const Graph& g, const Graph& gp) {
    if (g.size() < 1 || gp.size() < 1)
        throw std::invalid_argument("cartesian_zf_bound_check: factors must each have an edge");
    CartesianBoundReport r;
    r.zf_left = zf_number_bruteforce(g);
    r.zf_right = zf_number_bruteforce(gp);
    r.zf_product = zf_number_bruteforce(cartesian(g, gp).graph);
    r.delta = max_fort_membership(gp);
    const double zz = static_cast<double>(r.zf_left) * static_cast<double>(r.zf_right);
    r.bound_nat = zz / (1.0 + std::log(static_cast<double>(r.delta))) + 1.0;
    r.bound_log2 = zz / (1.0 + std::log2(static_cast<double>(r.delta))) + 1.0;
    r.bound_log10 = zz / (1.0 + std::log10(static_cast<double>(r.delta))) + 1.0;
    r.holds = static_cast<double>(r.zf_product) >= r.bound_nat - 1e-9;
    return r;
}

}  // namespace fortlab
