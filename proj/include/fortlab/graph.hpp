#pragma once
#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace fortlab {

/* Simple undirected graph, immutable once built. Adjacency is stored as one
   VertexSet per vertex; the edge list keeps construction order (normalized
   to u < v) so generated graphs serialize with stable, documented bytes. */
class Graph {
public:
    Graph() = default;

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative order");
        adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
        edges_.reserve(edges.size());
        for (auto [a, b] : edges) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) +
                                            " " + std::to_string(b));
            if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
            int u = std::min(a, b), v = std::max(a, b);
            if (adj_[u].contains(v))
                throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                            std::to_string(v));
            adj_[u].insert(v);
            adj_[v].insert(u);
            edges_.emplace_back(u, v);
        }
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const VertexSet& neighbors(int u) const {
        check_vertex(u);
        return adj_[static_cast<std::size_t>(u)];
    }

    /* adjacency row as a plain word, for the mask-based inner loops */
    std::uint64_t neighbors_mask(int u) const { return neighbors(u).mask64(); }

    int degree(int u) const { return neighbors(u).count(); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[static_cast<std::size_t>(u)].contains(v);
    }

    /* normalized (u < v), in construction order */
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    VertexSet vertices() const { return VertexSet::full(n_); }

private:
    void check_vertex(int u) const {
        if (u < 0 || u >= n_)
            throw std::invalid_argument("vertex out of range: " + std::to_string(u));
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::pair<int, int>> edges_;
};

inline VertexSet neighborhood(const Graph& g, int u) { return g.neighbors(u); }

inline VertexSet closed_neighborhood(const Graph& g, int u) { return g.neighbors(u).with(u); }

inline int min_degree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("min_degree: graph has no vertices");
    int d = g.order();
    for (int u = 0; u < g.order(); ++u) d = std::min(d, g.degree(u));
    return d;
}

/* Components in BFS order from ascending seed ids, so the result is
   deterministic and the first component contains vertex 0. */
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen(g.order());
    for (int s = 0; s < g.order(); ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp(g.order());
        std::queue<int> q;
        q.push(s);
        seen.insert(s);
        comp.insert(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (!seen.contains(v)) {
                    seen.insert(v);
                    comp.insert(v);
                    q.push(v);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_sub;     /* parent id -> new id, -1 if dropped */
    std::vector<int> to_parent;  /* new id -> parent id, ascending */
};

/* Induced subgraph on w; vertices are renumbered 0..|w|-1 in ascending
   parent-id order. */
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    if (w.universe() != g.order())
        throw std::invalid_argument("induced_subgraph: vertex set universe mismatch");
    InducedSubgraph out;
    out.to_sub.assign(static_cast<std::size_t>(g.order()), -1);
    out.to_parent = w.to_vector();
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        out.to_sub[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (w.contains(u) && w.contains(v))
            edges.emplace_back(out.to_sub[static_cast<std::size_t>(u)],
                               out.to_sub[static_cast<std::size_t>(v)]);
    out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
    return out;
}

/* open twins: N(u) = N(v); such u, v are never adjacent when equal since
   neighborhoods exclude the vertices themselves only if u ~ v fails */
inline bool are_open_twins(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("are_open_twins: vertices must differ");
    return g.neighbors(u) == g.neighbors(v);
}

inline bool is_cut_vertex(const Graph& g, int u) {
    VertexSet rest = g.vertices().without(u);  /* bounds-checks u */
    std::size_t before = connected_components(g).size();
    std::size_t after = connected_components(induced_subgraph(g, rest).graph).size();
    return after > before;
}

inline bool is_cut_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("is_cut_edge: no such edge " + std::to_string(u) + " " +
                                    std::to_string(v));
    std::vector<std::pair<int, int>> edges;
    int a = std::min(u, v), b = std::max(u, v);
    for (auto e : g.edges())
        if (e != std::make_pair(a, b)) edges.push_back(e);
    Graph h(g.order(), edges);
    return connected_components(h).size() > connected_components(g).size();
}

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

/* unique u-v path in a tree, endpoints included */
inline std::vector<int> tree_path(const Graph& g, int u, int v) {
    if (!is_tree(g)) throw std::invalid_argument("tree_path: graph is not a tree");
    g.neighbors(u);
    g.neighbors(v);
    std::vector<int> parent(static_cast<std::size_t>(g.order()), -2);
    std::queue<int> q;
    q.push(u);
    parent[static_cast<std::size_t>(u)] = -1;
    while (!q.empty() && parent[static_cast<std::size_t>(v)] == -2) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x)) {
            if (parent[static_cast<std::size_t>(y)] == -2) {
                parent[static_cast<std::size_t>(y)] = x;
                q.push(y);
            }
        }
    }
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace fortlab
