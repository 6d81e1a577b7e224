/* Acceptance suite: one line per criterion, nonzero exit when any fail.
   Time limits and tolerances live in the kCriteria table below, next to the
   check they gate, so a run documents exactly what was enforced. */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fortlab/bigint.hpp>
#include <fortlab/cli.hpp>
#include <fortlab/families.hpp>
#include <fortlab/formulas.hpp>
#include <fortlab/fort_cover.hpp>
#include <fortlab/forts.hpp>
#include <fortlab/graph.hpp>
#include <fortlab/products.hpp>
#include <fortlab/zero_forcing.hpp>

#include "support/graph_gen.hpp"
#include "support/test_graphs.hpp"

using namespace fortlab;

namespace {

std::uint64_t count_minimal(const Graph& g) {
    return enumerate_minimal_forts(g).forts.size();
}

Graph family(FamilyKind kind, std::vector<long long> params) {
    return generate({kind, std::move(params)});
}

/* Nondecreasing leg tuples with k legs, lengths 1..4, spider order <= 13. */
std::vector<std::vector<long long>> spider_corpus() {
    std::vector<std::vector<long long>> out;
    for (int k = 2; k <= 4; ++k) {
        std::vector<long long> legs(static_cast<std::size_t>(k), 1);
        for (;;) {
            const long long total = std::accumulate(legs.begin(), legs.end(), 0ll);
            if (1 + total <= 13) out.push_back(legs);
            int i = k - 1;
            while (i >= 0 && legs[static_cast<std::size_t>(i)] == 4) --i;
            if (i < 0) break;
            ++legs[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                legs[static_cast<std::size_t>(j)] = legs[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

std::string legs_text(const std::vector<long long>& legs) {
    std::string s = "spider:";
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(legs[i]);
    }
    return s;
}

/* Sorted minimal-fort masks, usable for set equality at order <= 64. */
std::vector<std::uint64_t> minimal_fort_masks(const Graph& g) {
    std::vector<std::uint64_t> masks;
    for (const auto& f : enumerate_minimal_forts(g).forts) masks.push_back(f.mask64());
    std::sort(masks.begin(), masks.end());
    return masks;
}

bool crit_cycle_counts(std::string& note) {
    for (int n = 3; n <= 14; ++n) {
        const BigInt got(count_minimal(family(FamilyKind::cycle, {n})));
        if (got != cycle_count(n)) {
            note = "cycle:" + std::to_string(n) + " enumerated " + got.str() + " vs " +
                   cycle_count(n).str();
            return false;
        }
    }
    return true;
}

bool crit_path_counts(std::string& note) {
    for (int n = 1; n <= 16; ++n) {
        const BigInt got(count_minimal(family(FamilyKind::path, {n})));
        if (got != path_count(n)) {
            note = "path:" + std::to_string(n) + " enumerated " + got.str() + " vs " +
                   path_count(n).str();
            return false;
        }
    }
    return true;
}

bool crit_rounded_forms(std::string& note) {
    for (int n = 10; n <= 200; ++n) {
        bool fallback = false;
        if (cycle_count_rounded(n, &fallback) != cycle_count(n) || fallback) {
            note = "cycle rounding diverged at n = " + std::to_string(n);
            return false;
        }
    }
    for (int n = 1; n <= 200; ++n) {
        bool fallback = false;
        if (path_count_rounded(n, &fallback) != path_count(n) || fallback) {
            note = "path rounding diverged at n = " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool crit_spider_formula(std::string& note) {
    for (const auto& legs : spider_corpus()) {
        const BigInt got(count_minimal(family(FamilyKind::spider, legs)));
        if (got != spider_count(legs)) {
            note = legs_text(legs) + " enumerated " + got.str() + " vs " +
                   spider_count(legs).str();
            return false;
        }
    }
    return true;
}

bool crit_spider_bound(std::string& note) {
    for (const auto& legs : spider_corpus()) {
        if (spider_count(legs) > spider_bound(legs)) {
            note = legs_text(legs) + " count " + spider_count(legs).str() +
                   " exceeds bound " + spider_bound(legs).str();
            return false;
        }
    }
    return true;
}

bool crit_windmill(std::string& note) {
    const std::vector<std::pair<int, int>> cases = {{3, 2}, {3, 3}, {4, 2}, {5, 2}, {3, 4}};
    for (auto [r, k] : cases) {
        const std::string name = "windmill:" + std::to_string(r) + "," + std::to_string(k);
        const FortCollection built = windmill_minimal_forts(r, k);
        const FortCollection oracle =
            enumerate_minimal_forts_oracle(family(FamilyKind::windmill, {r, k}));
        if (!(built == oracle)) {
            note = name + " construction differs from the oracle set";
            return false;
        }
        if (BigInt(built.forts.size()) != windmill_count(r, k)) {
            note = name + " count " + std::to_string(built.forts.size()) + " vs formula " +
                   windmill_count(r, k).str();
            return false;
        }
    }
    if (windmill_minimal_forts(3, 3).forts.size() != 11) {
        note = "windmill:3,3 should have exactly 11 minimal forts";
        return false;
    }
    return true;
}

bool crit_wheel_sequence(std::string& note) {
    std::ostringstream out, err;
    const int code = cli::run_cli({"wheel-seq", "16", "--human"}, out, err);
    const std::string expected = "3,4,5,3,14,12,21,25,44,55,78,112,158\n";
    if (code != 0 || out.str() != expected) {
        note = "wheel-seq 16 printed \"" + out.str() + "\" (exit " + std::to_string(code) + ")";
        return false;
    }
    return true;
}

bool crit_wheel_sunlet_bounds(std::string& note) {
    for (int n = 11; n <= 13; ++n) {
        const BigInt got(count_minimal(family(FamilyKind::wheel, {n})));
        if (got < perrin(n - 1)) {
            note = "wheel:" + std::to_string(n) + " count " + got.str() + " below " +
                   perrin(n - 1).str();
            return false;
        }
    }
    for (int n = 10; n <= 12; ++n) {
        const BigInt got(count_minimal(family(FamilyKind::sunlet, {n})));
        if (got < perrin(n)) {
            note = "sunlet:" + std::to_string(n) + " count " + got.str() + " below " +
                   perrin(n).str();
            return false;
        }
    }
    return true;
}

bool crit_sperner(std::string& note) {
    for (int n = 6; n <= 8; ++n) {
        const BigInt bound = sperner_bound(n);
        for (const Graph& g : testsupport::all_connected_graphs(n)) {
            if (BigInt(count_minimal(g)) >= bound) {
                note = "a connected graph of order " + std::to_string(n) +
                       " reached the middle binomial";
                return false;
            }
        }
    }
    std::mt19937 rng(90210);
    const double probs[] = {0.25, 0.4, 0.55, 0.7};
    for (int i = 0; i < 500; ++i) {
        const int n = 9 + i % 4;
        const Graph g = testsupport::random_graph(n, probs[(i / 4) % 4], rng);
        if (BigInt(count_minimal(g)) >= sperner_bound(n)) {
            note = "random graph " + std::to_string(i) + " (order " + std::to_string(n) +
                   ") reached the middle binomial";
            return false;
        }
    }
    if (count_minimal(family(FamilyKind::complete, {5})) != 10) {
        note = "complete:5 should have exactly 10 minimal forts";
        return false;
    }
    return true;
}

std::vector<std::uint64_t> zf_detail_masks(const Graph& g) { return detail::adjacency_masks(g); }

bool crit_duality(std::string& note) {
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& g : testsupport::all_graphs(n)) {
            const auto adj = zf_detail_masks(g);
            const std::uint64_t all = (std::uint64_t{1} << n) - 1;
            std::vector<std::uint64_t> complements;
            for (std::uint64_t s = 0; s <= all; ++s) {
                if (detail::closure_mask(adj, n, s) == all) continue;
                bool maximal = true;
                for (int v = 0; v < n && maximal; ++v)
                    if (!((s >> v) & 1) &&
                        detail::closure_mask(adj, n, s | (std::uint64_t{1} << v)) != all)
                        maximal = false;
                if (maximal) complements.push_back(all & ~s);
            }
            std::sort(complements.begin(), complements.end());
            if (complements != minimal_fort_masks(g)) {
                note = "duality failed on an order-" + std::to_string(n) + " graph";
                return false;
            }
        }
    }
    return true;
}

bool check_cover_equivalence(const Graph& g) {
    const int n = g.order();
    const auto adj = zf_detail_masks(g);
    const std::uint64_t all = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    const auto forts = minimal_fort_masks(g);
    for (std::uint64_t s = 0; s <= all; ++s) {
        const bool forcing = detail::closure_mask(adj, n, s) == all;
        bool hits = true;
        for (std::uint64_t f : forts)
            if ((s & f) == 0) {
                hits = false;
                break;
            }
        if (forcing != hits) return false;
        if (n == 0) break;
    }
    return true;
}

bool crit_fort_cover(std::string& note) {
    std::vector<Graph> corpus;
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : testsupport::all_graphs(n)) corpus.push_back(g);
    for (const char* spec :
         {"cycle:9", "cycle:10", "path:9", "path:10", "wheel:9", "wheel:10", "complete:9",
          "complete:10", "complete_bipartite:4,5", "complete_bipartite:5,5", "sunlet:5",
          "windmill:4,3", "spider:3,3,3", "ladder:5", "comb:5", "empty:9"})
        corpus.push_back(generate(parse_family_spec(spec)));
    corpus.push_back(testsupport::petersen());
    std::mt19937 rng(11011);
    const double probs[] = {0.3, 0.5, 0.7, 0.85};
    for (int i = 0; i < 40; ++i)
        corpus.push_back(testsupport::random_graph(9 + i % 2, probs[(i / 2) % 4], rng));

    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Graph& g = corpus[i];
        if (!check_cover_equivalence(g)) {
            note = "forcing/hitting equivalence failed on corpus graph " + std::to_string(i);
            return false;
        }
        const int via_cover = zf_number_fortcover(g).zf_number;
        const int via_brute = zf_number_bruteforce(g);
        if (via_cover != via_brute) {
            note = "solver disagreement on corpus graph " + std::to_string(i) + ": cover " +
                   std::to_string(via_cover) + " vs brute " + std::to_string(via_brute);
            return false;
        }
    }
    return true;
}

bool crit_small_fort(std::string& note) {
    std::mt19937 rng(12001);
    for (int i = 0; i < 200; ++i) {
        const int n = 6 + i % 9;
        const int need = (n + 1) / 2 + 1;
        const Graph g = testsupport::random_graph_min_degree(n, need, rng);
        const VertexSet f = construct_small_fort(g);
        if (!is_fort(g, f) || f.count() >= n / 2 || f.empty()) {
            note = "instance " + std::to_string(i) + " (order " + std::to_string(n) +
                   ") produced a bad fort of size " + std::to_string(f.count());
            return false;
        }
    }
    return true;
}

bool crit_tree_paths(std::string& note) {
    std::mt19937 rng(13001);
    for (int i = 0; i < 200; ++i) {
        const int n = 4 + i % 11;
        const Graph t = testsupport::random_tree(n, rng);
        for (const auto& f : enumerate_minimal_forts(t).forts) {
            const TreePathReport r = check_tree_induced_path(t, f);
            const int members = f.count();
            if (!r.all_pass || r.pairs_checked != members * (members - 1) / 2) {
                note = "tree " + std::to_string(i) + " (order " + std::to_string(n) +
                       ") has a fort pair without its induced path";
                return false;
            }
        }
    }
    return true;
}

bool crit_vertex_sum(std::string& note) {
    std::mt19937 rng(14001);
    int built = 0;
    for (int i = 0; i < 50; ++i) {
        const int n1 = 3 + i % 4;
        const int n2_max = std::min<int>(7, 13 - n1);
        const int n2 = 3 + static_cast<int>(rng() % static_cast<unsigned>(n2_max - 2));
        Graph g = testsupport::random_graph(n1, 0.6, rng);
        while (!is_connected(g)) g = testsupport::random_graph(n1, 0.6, rng);
        Graph gp = testsupport::random_graph(n2, 0.6, rng);
        while (!is_connected(gp)) gp = testsupport::random_graph(n2, 0.6, rng);
        const int u = static_cast<int>(rng() % static_cast<unsigned>(n1));
        const int up = static_cast<int>(rng() % static_cast<unsigned>(n2));

        const ProductGraph sum = vertex_sum(g, u, gp, up);
        std::set<std::uint64_t> combined;
        for (const auto& f : enumerate_minimal_forts_oracle(g).forts) {
            if (!f.contains(u)) continue;
            for (const auto& fp : enumerate_minimal_forts_oracle(gp).forts) {
                if (!fp.contains(up)) continue;
                const CombinedFort c = combine_forts_vertex_sum(g, u, gp, up, f, fp);
                if (c.minimal) combined.insert(c.fort.mask64());
                ++built;
            }
        }
        std::set<std::uint64_t> direct;
        for (const auto& h : enumerate_minimal_forts_oracle(sum.graph).forts)
            if (h.contains(*sum.merged_vertex)) direct.insert(h.mask64());
        if (combined != direct) {
            note = "sum instance " + std::to_string(i) + " (orders " + std::to_string(n1) +
                   "+" + std::to_string(n2) + ") missed or invented a merge-vertex fort";
            return false;
        }
    }
    if (built == 0) {
        note = "no combinable fort pairs arose; corpus too thin to conclude anything";
        return false;
    }
    return true;
}

bool crit_cartesian_bound(std::string& note) {
    const std::vector<std::pair<std::string, Graph>> factors = {
        {"path:2", family(FamilyKind::path, {2})},   {"path:3", family(FamilyKind::path, {3})},
        {"path:4", family(FamilyKind::path, {4})},   {"cycle:3", family(FamilyKind::cycle, {3})},
        {"cycle:4", family(FamilyKind::cycle, {4})}, {"complete:3", family(FamilyKind::complete, {3})},
    };
    for (const auto& [la, a] : factors) {
        for (const auto& [lb, b] : factors) {
            if (a.order() * b.order() > 16) continue;
            const CartesianBoundReport r = cartesian_zf_bound_check(a, b);
            if (!r.holds) {
                note = la + " x " + lb + ": product Z " + std::to_string(r.zf_product) +
                       " fell below the bound " + std::to_string(r.bound_nat);
                return false;
            }
        }
    }
    return true;
}

struct Criterion {
    const char* name;
    bool (*check)(std::string&);
    double limit_seconds;  /* <= 0 means no time gate */
};

const Criterion kCriteria[] = {
    {"cycle fort counts equal the recurrence values (n = 3..14)", crit_cycle_counts, 10.0},
    {"path fort counts equal the recurrence values (n = 1..16)", crit_path_counts, 10.0},
    {"rounded closed forms equal the recurrences (orders to 200)", crit_rounded_forms, 1.0},
    {"spider fort counts equal the three-term formula (k = 2..4, legs <= 4)", crit_spider_formula,
     60.0},
    {"spider formula stays within the pair bound on the same corpus", crit_spider_bound, 60.0},
    {"windmill fort constructions equal the oracle sets and counts", crit_windmill, 60.0},
    {"wheel hub sequence through order 16 matches the reference values", crit_wheel_sequence,
     300.0},
    {"wheel and sunlet fort counts clear their cycle lower bounds", crit_wheel_sunlet_bounds, 0},
    {"fort families stay strictly under the middle binomial, K_5 tight at 10", crit_sperner,
     600.0},
    {"minimal forts are the complements of maximal failed forcing sets (n <= 8)", crit_duality,
     0},
    {"forcing sets are exactly the fort-hitting sets and both solvers agree", crit_fort_cover,
     600.0},
    {"dense-graph constructor returns a small verified fort on 200 randoms", crit_small_fort, 0},
    {"tree forts connect every member pair through a passing induced path", crit_tree_paths, 0},
    {"vertex-sum combination reproduces the merge-vertex forts on 50 randoms", crit_vertex_sum,
     0},
    {"product forcing numbers clear the logarithmic factor bound on all pairs",
     crit_cartesian_bound, 0},
};

}  // namespace

int main() {
    int failures = 0;
    int index = 0;
    for (const Criterion& c : kCriteria) {
        ++index;
        std::string note;
        bool pass = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            pass = c.check(note);
        } catch (const std::exception& e) {
            pass = false;
            note = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (pass && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            pass = false;
            note = "correct but over the " + std::to_string(c.limit_seconds) + "s limit";
        }
        std::cout << (pass ? "PASS" : "FAIL") << "  " << std::setw(2) << index << "  "
                  << std::left << std::setw(74) << c.name << std::right << std::fixed
                  << std::setprecision(2) << std::setw(8) << seconds << "s";
        if (!note.empty()) std::cout << "  [" << note << "]";
        std::cout << "\n";
        if (!pass) ++failures;
    }
    std::cout << (failures == 0 ? "all 15 criteria pass" : std::to_string(failures) + " criteria FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
