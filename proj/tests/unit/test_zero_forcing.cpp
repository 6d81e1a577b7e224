#include <random>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>
#include "fortlab/errors.hpp"
#include "fortlab/families.hpp"
#include "fortlab/zero_forcing.hpp"
#include "support/test_graphs.hpp"

using namespace fortlab;
using testsupport::random_graph;

namespace {

Graph path_graph(int n) { return generate({FamilyKind::path, {n}}); }
Graph cycle_graph(int n) { return generate({FamilyKind::cycle, {n}}); }
Graph complete_graph(int n) { return generate({FamilyKind::complete, {n}}); }

/* Replay a forcing log from scratch and check each step is legal under
   the color change rule: the forcing vertex is colored, its target is its
   only uncolored neighbor at that moment. */
void check_forcing_log(const Graph& g, const VertexSet& start, const ClosureResult& r) {
    VertexSet colored = start;
    for (auto [u, v] : r.forces) {
        REQUIRE(colored.contains(u));
        REQUIRE_FALSE(colored.contains(v));
        VertexSet uncolored_nbrs = g.neighbors(u) - colored;
        REQUIRE(uncolored_nbrs.count() == 1);
        REQUIRE(uncolored_nbrs.contains(v));
        colored.insert(v);
    }
    REQUIRE(colored == r.closure);
}

}  // namespace

TEST_CASE("closure on hand-checked examples", "[zero_forcing]") {
    SECTION("path fills from an end, one force per vertex") {
        Graph p3 = path_graph(3);
        auto r = closure(p3, VertexSet::of(3, {0}));
        REQUIRE(r.closure.is_full());
        REQUIRE(r.forces == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    }
    SECTION("path from an interior vertex stalls immediately") {
        Graph p5 = path_graph(5);
        auto r = closure(p5, VertexSet::of(5, {2}));
        REQUIRE(r.closure == VertexSet::of(5, {2}));
        REQUIRE(r.forces.empty());
    }
    SECTION("cycle needs two adjacent seeds") {
        Graph c4 = cycle_graph(4);
        REQUIRE(closure(c4, VertexSet::of(4, {0})).closure == VertexSet::of(4, {0}));
        REQUIRE(closure(c4, VertexSet::of(4, {0, 1})).closure.is_full());
        REQUIRE(closure(c4, VertexSet::of(4, {0, 2})).closure == VertexSet::of(4, {0, 2}));
    }
    SECTION("complete graph forces only from n-1 seeds") {
        Graph k5 = complete_graph(5);
        REQUIRE(closure(k5, VertexSet::of(5, {0, 1, 2})).closure == VertexSet::of(5, {0, 1, 2}));
        REQUIRE(closure(k5, VertexSet::of(5, {0, 1, 2, 3})).closure.is_full());
    }
    SECTION("empty graph never forces") {
        Graph e4(4, {});
        auto s = VertexSet::of(4, {1, 3});
        REQUIRE(closure(e4, s).closure == s);
    }
    SECTION("empty start set stays empty on a nonempty graph") {
        Graph p4 = path_graph(4);
        REQUIRE(closure(p4, VertexSet(4)).closure == VertexSet(4));
    }
}

TEST_CASE("closure properties on random graphs", "[zero_forcing]") {
    std::mt19937 rng(7301);
    std::uniform_int_distribution<int> order(1, 14);
    std::uniform_real_distribution<double> dens(0.1, 0.9);
    for (int trial = 0; trial < 120; ++trial) {
        int n = order(rng);
        Graph g = random_graph(n, dens(rng), rng);
        std::uniform_int_distribution<std::uint64_t> bits(0, (n == 64) ? ~0ull : (1ull << n) - 1);
        VertexSet s = VertexSet::from_mask(n, bits(rng));
        auto r = closure(g, s);

        INFO("n=" << n << " trial=" << trial);
        REQUIRE(s.is_subset_of(r.closure));
        check_forcing_log(g, s, r);

        /* idempotent */
        auto r2 = closure(g, r.closure);
        REQUIRE(r2.closure == r.closure);
        REQUIRE(r2.forces.empty());

        /* monotone: growing the start set never shrinks the closure */
        VertexSet t = s;
        VertexSet outside = VertexSet::full(n) - s;
        if (!outside.empty()) t.insert(outside.first());
        REQUIRE(r.closure.is_subset_of(closure(g, t).closure));
    }
}

TEST_CASE("zero forcing set predicate", "[zero_forcing]") {
    Graph p5 = path_graph(5);
    REQUIRE(is_zero_forcing_set(p5, VertexSet::of(5, {0})));
    REQUIRE(is_zero_forcing_set(p5, VertexSet::of(5, {4})));
    REQUIRE_FALSE(is_zero_forcing_set(p5, VertexSet::of(5, {2})));
    REQUIRE(is_zero_forcing_set(p5, VertexSet::full(5)));

    Graph c6 = cycle_graph(6);
    REQUIRE(is_zero_forcing_set(c6, VertexSet::of(6, {2, 3})));
    REQUIRE_FALSE(is_zero_forcing_set(c6, VertexSet::of(6, {0, 3})));
}

TEST_CASE("failed and maximal failed sets", "[zero_forcing]") {
    Graph p4 = path_graph(4);
    SECTION("a failed set is one whose closure is proper") {
        REQUIRE(is_failed_zfs(p4, VertexSet::of(4, {1})));
        REQUIRE_FALSE(is_failed_zfs(p4, VertexSet::of(4, {0})));
        REQUIRE_FALSE(is_failed_zfs(p4, VertexSet::full(4)));
        REQUIRE(is_failed_zfs(p4, VertexSet(4)));
    }
    SECTION("maximal means every single-vertex addition makes it forcing") {
        REQUIRE(is_maximal_failed_zfs(p4, VertexSet::of(4, {1})));
        REQUIRE(is_maximal_failed_zfs(p4, VertexSet::of(4, {2})));
        /* empty set is failed but augmenting by an interior vertex still fails */
        REQUIRE_FALSE(is_maximal_failed_zfs(p4, VertexSet(4)));
        /* forcing sets are not failed at all */
        REQUIRE_FALSE(is_maximal_failed_zfs(p4, VertexSet::of(4, {0})));
    }
    SECTION("cycle example: two opposite vertices") {
        Graph c4 = cycle_graph(4);
        REQUIRE(is_maximal_failed_zfs(c4, VertexSet::of(4, {0, 2})));
        REQUIRE_FALSE(is_maximal_failed_zfs(c4, VertexSet::of(4, {0})));
    }
}

TEST_CASE("zero forcing number by exhaustive search", "[zero_forcing]") {
    SECTION("paths") {
        for (int n = 1; n <= 8; ++n) REQUIRE(zf_number_bruteforce(path_graph(n)) == 1);
    }
    SECTION("cycles") {
        for (int n = 3; n <= 8; ++n) REQUIRE(zf_number_bruteforce(cycle_graph(n)) == 2);
    }
    SECTION("complete graphs") {
        REQUIRE(zf_number_bruteforce(complete_graph(1)) == 1);
        for (int n = 2; n <= 6; ++n) REQUIRE(zf_number_bruteforce(complete_graph(n)) == n - 1);
    }
    SECTION("empty graphs need every vertex") {
        for (int n = 0; n <= 5; ++n)
            REQUIRE(zf_number_bruteforce(Graph(n, {})) == n);
    }
    SECTION("stars") {
        for (int q = 2; q <= 6; ++q) {
            Graph star = generate({FamilyKind::star, {q}});
            REQUIRE(zf_number_bruteforce(star) == q - 1);
        }
    }
    SECTION("complete bipartite") {
        Graph k23 = generate({FamilyKind::complete_bipartite, {2, 3}});
        REQUIRE(zf_number_bruteforce(k23) == 3);
        Graph k33 = generate({FamilyKind::complete_bipartite, {3, 3}});
        REQUIRE(zf_number_bruteforce(k33) == 4);
    }
    SECTION("petersen graph") {
        REQUIRE(zf_number_bruteforce(testsupport::petersen()) == 5);
    }
    SECTION("ladders") {
        for (int k = 2; k <= 5; ++k)
            REQUIRE(zf_number_bruteforce(generate({FamilyKind::ladder, {k}})) == 2);
    }
    SECTION("order cap raises the resource error") {
        REQUIRE_THROWS_AS(zf_number_bruteforce(Graph(31, {})), ResourceLimitError);
    }
}

TEST_CASE("any minimum zero forcing set is certified by closure", "[zero_forcing]") {
    std::mt19937 rng(9417);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(9, 0.35, rng);
        int z = zf_number_bruteforce(g);
        /* no smaller set forces: spot-check a few random subsets of size z-1 */
        if (z > 0) {
            std::uniform_int_distribution<int> pick(0, 8);
            for (int i = 0; i < 20; ++i) {
                VertexSet s(9);
                while (static_cast<int>(s.count()) < z - 1) s.insert(pick(rng));
                REQUIRE_FALSE(is_zero_forcing_set(g, s));
            }
        }
    }
}
