#pragma once
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "products.hpp"

namespace fortlab {

/* Named graph families with fixed labelings, so generated graphs are
   byte-reproducible and fort coordinates mean the same thing everywhere.
     path/cycle: consecutive ids, cycle closes with {0, n-1}
     star:       center 0, leaves 1..q
     spider:     junction 0, legs laid out leg by leg, outward
     comb:       sugar for P_k o K_1 (pendant of i is k+i)
     ladder:     sugar for K_2 x P_k (rows 0..k-1 and k..2k-1)
     wheel:      sugar for C_{n-1} v K_1 (hub is the last id, n-1)
     sunlet:     sugar for C_n o K_1 (pendant of i is n+i)
     windmill:   center 0, blade b occupies 1 + b(r-1) .. (b+1)(r-1) */

enum class FamilyKind {
    empty,
    complete,
    complete_bipartite,
    path,
    cycle,
    star,
    spider,
    comb,
    ladder,
    wheel,
    sunlet,
    windmill,
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::empty;
    std::vector<long long> params;
};

inline const char* family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::empty: return "empty";
        case FamilyKind::complete: return "complete";
        case FamilyKind::complete_bipartite: return "complete_bipartite";
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::star: return "star";
        case FamilyKind::spider: return "spider";
        case FamilyKind::comb: return "comb";
        case FamilyKind::ladder: return "ladder";
        case FamilyKind::wheel: return "wheel";
        case FamilyKind::sunlet: return "sunlet";
        case FamilyKind::windmill: return "windmill";
    }
    throw std::logic_error("family_name: unhandled kind");
}

inline FamilyKind family_kind_from_name(const std::string& name) {
    for (FamilyKind k :
         {FamilyKind::empty, FamilyKind::complete, FamilyKind::complete_bipartite,
          FamilyKind::path, FamilyKind::cycle, FamilyKind::star, FamilyKind::spider,
          FamilyKind::comb, FamilyKind::ladder, FamilyKind::wheel, FamilyKind::sunlet,
          FamilyKind::windmill})
        if (name == family_name(k)) return k;
    throw std::invalid_argument("unknown family: " + name);
}

namespace detail {

inline void require(bool ok, const std::string& why) {
    if (!ok) throw std::invalid_argument(why);
}

inline void validate_family(const FamilySpec& s) {
    const auto& p = s.params;
    auto arity = [&](std::size_t want) {
        require(p.size() == want, std::string(family_name(s.kind)) + ": expected " +
                                      std::to_string(want) + " parameter(s), got " +
                                      std::to_string(p.size()));
    };
    switch (s.kind) {
        case FamilyKind::empty: arity(1); require(p[0] >= 0, "empty: requires n >= 0"); break;
        case FamilyKind::complete: arity(1); require(p[0] >= 0, "complete: requires n >= 0"); break;
        case FamilyKind::complete_bipartite:
            arity(2);
            require(p[0] >= 1 && p[1] >= 1, "complete_bipartite: requires p, q >= 1");
            break;
        case FamilyKind::path: arity(1); require(p[0] >= 1, "path: requires n >= 1"); break;
        case FamilyKind::cycle: arity(1); require(p[0] >= 3, "cycle: requires n >= 3"); break;
        case FamilyKind::star: arity(1); require(p[0] >= 1, "star: requires q >= 1"); break;
        case FamilyKind::spider:
            require(p.size() >= 2, "spider: requires k >= 2 legs");
            for (auto l : p) require(l >= 1, "spider: every leg length must be >= 1");
            break;
        case FamilyKind::comb: arity(1); require(p[0] >= 1, "comb: requires k >= 1"); break;
        case FamilyKind::ladder: arity(1); require(p[0] >= 1, "ladder: requires k >= 1"); break;
        case FamilyKind::wheel: arity(1); require(p[0] >= 4, "wheel: requires n >= 4"); break;
        case FamilyKind::sunlet: arity(1); require(p[0] >= 3, "sunlet: requires n >= 3"); break;
        case FamilyKind::windmill:
            arity(2);
            require(p[0] >= 3, "windmill: requires r >= 3");
            require(p[1] >= 2, "windmill: requires k >= 2");
            break;
    }
}

}  // namespace detail

inline long long order_of(const FamilySpec& s) {
    detail::validate_family(s);
    const auto& p = s.params;
    switch (s.kind) {
        case FamilyKind::empty:
        case FamilyKind::complete:
        case FamilyKind::path:
        case FamilyKind::cycle:
        case FamilyKind::wheel: return p[0];
        case FamilyKind::complete_bipartite: return p[0] + p[1];
        case FamilyKind::star: return p[0] + 1;
        case FamilyKind::spider:
            return std::accumulate(p.begin(), p.end(), 1ll);
        case FamilyKind::comb:
        case FamilyKind::ladder:
        case FamilyKind::sunlet: return 2 * p[0];
        case FamilyKind::windmill: return p[1] * (p[0] - 1) + 1;
    }
    throw std::logic_error("order_of: unhandled kind");
}

inline Graph generate(const FamilySpec& s) {
    detail::validate_family(s);
    const auto& p = s.params;
    auto as_int = [](long long x) {
        if (x > 1'000'000) throw std::invalid_argument("family parameter too large to build");
        return static_cast<int>(x);
    };
    switch (s.kind) {
        case FamilyKind::empty: return Graph(as_int(p[0]), {});
        case FamilyKind::complete: {
            int n = as_int(p[0]);
            std::vector<std::pair<int, int>> e;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
            return Graph(n, e);
        }
        case FamilyKind::complete_bipartite: {
            int a = as_int(p[0]), b = as_int(p[1]);
            std::vector<std::pair<int, int>> e;
            for (int u = 0; u < a; ++u)
                for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
            return Graph(a + b, e);
        }
        case FamilyKind::path: {
            int n = as_int(p[0]);
            std::vector<std::pair<int, int>> e;
            for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
            return Graph(n, e);
        }
        case FamilyKind::cycle: {
            int n = as_int(p[0]);
            std::vector<std::pair<int, int>> e;
            for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
            e.emplace_back(0, n - 1);
            return Graph(n, e);
        }
        case FamilyKind::star: {
            int q = as_int(p[0]);
            std::vector<std::pair<int, int>> e;
            for (int v = 1; v <= q; ++v) e.emplace_back(0, v);
            return Graph(q + 1, e);
        }
        case FamilyKind::spider: {
            std::vector<std::pair<int, int>> e;
            int next = 1;
            for (auto leg : p) {
                int len = as_int(leg);
                e.emplace_back(0, next);
                for (int i = 1; i < len; ++i, ++next) e.emplace_back(next, next + 1);
                ++next;
            }
            return Graph(next, e);
        }
        case FamilyKind::comb:
            return corona(generate({FamilyKind::path, {p[0]}}),
                          generate({FamilyKind::complete, {1}}))
                .graph;
        case FamilyKind::ladder:
            return cartesian(generate({FamilyKind::complete, {2}}),
                             generate({FamilyKind::path, {p[0]}}))
                .graph;
        case FamilyKind::wheel:
            return join_graphs(generate({FamilyKind::cycle, {p[0] - 1}}),
                               generate({FamilyKind::complete, {1}}))
                .graph;
        case FamilyKind::sunlet:
            return corona(generate({FamilyKind::cycle, {p[0]}}),
                          generate({FamilyKind::complete, {1}}))
                .graph;
        case FamilyKind::windmill: {
            int r = as_int(p[0]), k = as_int(p[1]);
            int per = r - 1;
            std::vector<std::pair<int, int>> e;
            for (int b = 0; b < k; ++b) {
                int base = 1 + b * per;
                for (int i = 0; i < per; ++i) e.emplace_back(0, base + i);
                for (int i = 0; i < per; ++i)
                    for (int j = i + 1; j < per; ++j) e.emplace_back(base + i, base + j);
            }
            return Graph(k * per + 1, e);
        }
    }
    throw std::logic_error("generate: unhandled kind");
}

/* "cycle:5", "windmill:3,3", "spider:2,2,2" */
inline FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec s;
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    s.kind = family_kind_from_name(name);
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::istringstream in(rest);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                s.params.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad family parameter: \"" + tok + "\"");
            }
        }
    }
    detail::validate_family(s);
    return s;
}

inline std::string family_spec_to_string(const FamilySpec& s) {
    std::string out = family_name(s.kind);
    for (std::size_t i = 0; i < s.params.size(); ++i)
        out += (i == 0 ? ":" : ",") + std::to_string(s.params[i]);
    return out;
}

}  // namespace fortlab
