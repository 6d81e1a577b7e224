#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

#include "fortlab/families.hpp"
#include "fortlab/fort_cover.hpp"
#include "fortlab/zero_forcing.hpp"
#include "support/test_graphs.hpp"

using namespace fortlab;
using testsupport::random_graph;

namespace {

/* smallest hitting set cardinality by scanning all subsets */
int hitting_min_by_scan(int universe, const std::vector<VertexSet>& sets) {
    int best = universe + 1;
    for (std::uint64_t mask = 0; mask < (1ull << universe); ++mask) {
        VertexSet s = VertexSet::from_mask(universe, mask);
        bool hits_all = true;
        for (const auto& f : sets)
            if (!f.intersects(s)) {
                hits_all = false;
                break;
            }
        if (hits_all) best = std::min(best, static_cast<int>(s.count()));
    }
    return best;
}

}  // namespace

TEST_CASE("forcing sets are exactly the fort transversals", "[fort_cover]") {
    /* the covering characterization itself, on every subset of random graphs */
    std::mt19937 rng(86028);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + trial % 8;
        Graph g = random_graph(n, 0.15 + 0.1 * (trial % 8), rng);
        auto minimal = enumerate_minimal_forts(g);
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            VertexSet s = VertexSet::from_mask(n, mask);
            bool hits = true;
            for (const auto& f : minimal.forts)
                if (!f.intersects(s)) {
                    hits = false;
                    break;
                }
            REQUIRE(is_zero_forcing_set(g, s) == hits);
        }
    }
}

TEST_CASE("exact minimum hitting set", "[fort_cover]") {
    SECTION("hand-checked instances") {
        REQUIRE(min_hitting_set(4, {}).empty());
        REQUIRE(min_hitting_set(4, {VertexSet::of(4, {1, 2}), VertexSet::of(4, {1, 3})})
                    .count() == 1);
        auto two = min_hitting_set(4, {VertexSet::of(4, {0, 2}), VertexSet::of(4, {1, 3})});
        REQUIRE(two.count() == 2);
        REQUIRE(two.intersects(VertexSet::of(4, {0, 2})));
        REQUIRE(two.intersects(VertexSet::of(4, {1, 3})));
    }
    SECTION("input validation") {
        REQUIRE_THROWS_AS(min_hitting_set(4, {VertexSet(4)}), std::invalid_argument);
        REQUIRE_THROWS_AS(min_hitting_set(4, {VertexSet::of(5, {0})}), std::invalid_argument);
    }
    SECTION("optimal on random set systems") {
        std::mt19937 rng(93561);
        std::uniform_int_distribution<int> nsets(1, 9);
        std::uniform_int_distribution<std::uint64_t> bits(1, (1ull << 8) - 1);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<VertexSet> sets;
            int k = nsets(rng);
            for (int i = 0; i < k; ++i) sets.push_back(VertexSet::from_mask(8, bits(rng)));
            VertexSet got = min_hitting_set(8, sets);
            for (const auto& f : sets) REQUIRE(f.intersects(got));
            REQUIRE(static_cast<int>(got.count()) == hitting_min_by_scan(8, sets));
        }
    }
}

TEST_CASE("covering solver reproduces the zero forcing number", "[fort_cover]") {
    SECTION("hand-checked values with certificates") {
        Graph k4 = generate({FamilyKind::complete, {4}});
        auto r = zf_number_fortcover(k4);
        REQUIRE(r.zf_number == 3);
        REQUIRE(static_cast<int>(r.certificate.hitting_set.count()) == 3);
        REQUIRE(is_zero_forcing_set(k4, r.certificate.hitting_set));
        REQUIRE(r.certificate.rounds >= 1);

        Graph p7 = generate({FamilyKind::path, {7}});
        REQUIRE(zf_number_fortcover(p7).zf_number == 1);
        Graph c9 = generate({FamilyKind::cycle, {9}});
        REQUIRE(zf_number_fortcover(c9).zf_number == 2);
        REQUIRE(zf_number_fortcover(testsupport::petersen()).zf_number == 5);
        REQUIRE(zf_number_fortcover(Graph(5, {})).zf_number == 5);
    }
    SECTION("certificate invariants") {
        std::mt19937 rng(40585);
        for (int trial = 0; trial < 25; ++trial) {
            int n = 2 + trial % 10;
            Graph g = random_graph(n, 0.2 + 0.1 * (trial % 7), rng);
            auto r = zf_number_fortcover(g);
            INFO("n=" << n << " trial=" << trial);
            REQUIRE(static_cast<int>(r.certificate.hitting_set.count()) == r.zf_number);
            REQUIRE(is_zero_forcing_set(g, r.certificate.hitting_set));
            for (const auto& f : r.certificate.forts.forts) {
                REQUIRE(is_fort(g, f));
                REQUIRE(f.intersects(r.certificate.hitting_set));
            }
        }
    }
    SECTION("matches exhaustive search across the family corpus") {
        for (const auto& [name, g] : testsupport::small_corpus(12)) {
            if (g.order() < 1) continue;
            INFO(name);
            REQUIRE(zf_number_fortcover(g).zf_number == zf_number_bruteforce(g));
        }
    }
    SECTION("matches exhaustive search on random graphs") {
        std::mt19937 rng(16127);
        for (int trial = 0; trial < 60; ++trial) {
            int n = 1 + trial % 13;
            double p = 0.1 + 0.08 * (trial % 10);
            Graph g = random_graph(n, p, rng);
            INFO("n=" << n << " p=" << p << " trial=" << trial);
            REQUIRE(zf_number_fortcover(g).zf_number == zf_number_bruteforce(g));
        }
    }
    SECTION("matches exhaustive search on random trees") {
        std::mt19937 rng(35211);
        for (int trial = 0; trial < 30; ++trial) {
            Graph t = testsupport::random_tree(2 + trial % 12, rng);
            REQUIRE(zf_number_fortcover(t).zf_number == zf_number_bruteforce(t));
        }
    }
    SECTION("empty graph is rejected") {
        REQUIRE_THROWS_AS(zf_number_fortcover(Graph(0, {})), std::invalid_argument);
    }
}

TEST_CASE("alternative violated-fort extractors", "[fort_cover]") {
    SECTION("unshrunk closure complement still converges to the same value") {
        auto unshrunk = [](const Graph& g, const VertexSet& failed) {
            return closure(g, failed).closure.complement();
        };
        std::mt19937 rng(75025);
        for (int trial = 0; trial < 20; ++trial) {
            Graph g = random_graph(1 + trial % 10, 0.4, rng);
            REQUIRE(zf_number_fortcover(g, unshrunk).zf_number == zf_number_bruteforce(g));
        }
    }
    SECTION("an extractor returning a non-fort is caught") {
        auto broken = [](const Graph& g, const VertexSet&) {
            return VertexSet::of(g.order(), {0});
        };
        Graph k3 = generate({FamilyKind::complete, {3}});
        REQUIRE_THROWS_AS(zf_number_fortcover(k3, broken), std::logic_error);
    }
    SECTION("an extractor whose fort meets the candidate set is caught") {
        /* {0, 2} is a fort of the 4-cycle; after round one the candidate
           hits it, so returning it again must be rejected */
        auto stuck = [](const Graph& g, const VertexSet&) {
            return VertexSet::of(g.order(), {0, 2});
        };
        Graph c4 = generate({FamilyKind::cycle, {4}});
        REQUIRE_THROWS_AS(zf_number_fortcover(c4, stuck), std::logic_error);
    }
}

TEST_CASE("default extractor output is a minimal violated fort", "[fort_cover]") {
    std::mt19937 rng(46368);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 9;
        Graph g = random_graph(n, 0.35, rng);
        /* any non-forcing set works as the stalled candidate */
        std::uniform_int_distribution<std::uint64_t> bits(0, (1ull << n) - 1);
        VertexSet s = VertexSet::from_mask(n, bits(rng));
        if (is_zero_forcing_set(g, s)) continue;
        VertexSet f = minimal_violated_fort(g, s);
        REQUIRE(is_minimal_fort(g, f));
        REQUIRE_FALSE(f.intersects(closure(g, s).closure));
    }
}
