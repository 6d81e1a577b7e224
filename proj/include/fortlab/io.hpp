#pragma once
#include <istream>
#include <ostream>
#include <sstream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace fortlab {

/* Edge-list text format. Line 1: "n m". Then exactly m lines "u v" with
   0 <= u < v < n. ASCII, newline separated. Parsing is strict: wrong
   ranges, u >= v, duplicates, self-loops, or trailing garbage all throw
   with the offending line number. */
inline Graph parse_edge_list(std::istream& in) {
    auto fail = [](int line, const std::string& why) {
        throw std::invalid_argument("edge list line " + std::to_string(line) + ": " + why);
    };
    std::string tok;
    long long n = -1, m = -1;
    {
        std::string line;
        if (!std::getline(in, line)) fail(1, "missing header");
        std::istringstream ls(line);
        if (!(ls >> n >> m)) fail(1, "expected \"n m\"");
        if (ls >> tok) fail(1, "trailing content after \"n m\"");
        if (n < 0 || m < 0) fail(1, "negative count");
    }
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < m; ++i) {
        int lineno = static_cast<int>(i) + 2;
        std::string line;
        if (!std::getline(in, line)) fail(lineno, "fewer edge lines than m");
        long long u = -1, v = -1;
        std::istringstream ls(line);
        if (!(ls >> u >> v)) fail(lineno, "expected \"u v\"");
        if (ls >> tok) fail(lineno, "trailing content after \"u v\"");
        if (u < 0 || v >= n) fail(lineno, "endpoint out of range");
        if (u == v) fail(lineno, "self-loop");
        if (u > v) fail(lineno, "endpoints must satisfy u < v");
        auto e = std::make_pair(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert(e).second) fail(lineno, "duplicate edge");
        edges.push_back(e);
    }
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            fail(static_cast<int>(m) + 2, "content after last edge");
    return Graph(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

/* Inverse of parse_edge_list; edges come out in the graph's construction
   order, which is what makes family generation byte-reproducible. */
inline void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

/* Undirected DOT with bare integer names. Edges are sorted by (u, v);
   isolated vertices get their own node statements so n survives a round
   trip through other tools. */
inline void write_dot(const Graph& g, std::ostream& out) {
    out << "graph {\n";
    for (int u = 0; u < g.order(); ++u)
        if (g.degree(u) == 0) out << "  " << u << ";\n";
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

inline std::string to_dot(const Graph& g) {
    std::ostringstream out;
    write_dot(g, out);
    return out.str();
}

}  // namespace fortlab
