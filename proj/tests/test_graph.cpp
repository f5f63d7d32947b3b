#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "ngk/codecs.hpp"
#include "ngk/graph.hpp"
#include "ngk/lcf.hpp"
#include "oracles.hpp"

using namespace ngk;

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph loadLcfFixture(const std::string& name, int s) {
    return realize(parseLcfTable(readFile(std::string(NGK_DATA_DIR "/fixtures/") + name), s));
}

}  // namespace

TEST_CASE("graph basics") {
    Graph g(4);
    CHECK(g.addEdge(0, 1));
    CHECK_FALSE(g.addEdge(1, 0));  // already present
    CHECK(g.hasEdge(1, 0));
    CHECK(g.edgeCount() == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.removeEdge(0, 1));
    CHECK_FALSE(g.removeEdge(0, 1));
    CHECK(g.edgeCount() == 0);
    CHECK_THROWS_AS(g.addEdge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.addEdge(0, 4), std::out_of_range);
}

TEST_CASE("girth on simple families") {
    CHECK(girth(oracle::cycle(5)) == 5);
    CHECK(girth(oracle::cycle(3)) == 3);
    CHECK(girth(oracle::petersen()) == 5);

    Graph p4(4);
    p4.addEdge(0, 1);
    p4.addEdge(1, 2);
    p4.addEdge(2, 3);
    CHECK_FALSE(girth(p4).has_value());

    CHECK_FALSE(girth(Graph(7)).has_value());
}

TEST_CASE("girth on fixtures") {
    CHECK(girth(loadLcfFixture("lcf_6_11_66.lcf", 11)) == 6);
}

TEST_CASE("girth agrees with brute force on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = oracle::randomGraph(rng, n, 0.1 + 0.8 * (trial % 9) / 8.0);
        CAPTURE(encodeGraph6(g));
        CHECK(girth(g) == oracle::girth(g));
    }
}

TEST_CASE("containsCycleShorterThan") {
    CHECK(containsCycleShorterThan(oracle::cycle(5), 6));
    CHECK_FALSE(containsCycleShorterThan(oracle::cycle(5), 5));
    CHECK_FALSE(containsCycleShorterThan(loadLcfFixture("lcf_9_19_171.lcf", 19), 7));
}

TEST_CASE("incremental short-cycle test agrees with from-scratch") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 8 + static_cast<int>(rng() % 10);
        const int bound = 4 + static_cast<int>(rng() % 4);
        Graph g(n);
        for (int step = 0; step < 3 * n; ++step) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u == v || g.hasEdge(u, v)) continue;
            // incremental prediction, then the from-scratch recomputation
            const bool incrementalSaysShort = distanceAtMost(g, u, v, bound - 2);
            g.addEdge(u, v);
            CAPTURE(n);
            CAPTURE(bound);
            CAPTURE(u);
            CAPTURE(v);
            CAPTURE(encodeGraph6(g));
            CHECK(incrementalSaysShort == containsCycleShorterThan(g, bound));
            if (incrementalSaysShort) g.removeEdge(u, v);  // keep girth >= bound
        }
        CHECK_FALSE(containsCycleShorterThan(g, bound));
    }
}

TEST_CASE("containsOddCycle") {
    CHECK_FALSE(containsOddCycle(oracle::cycle(6)));
    CHECK(containsOddCycle(oracle::cycle(9)));
    CHECK_FALSE(containsOddCycle(Graph(3)));
    CHECK(containsOddCycle(loadLcfFixture("lcf_4_20_80.lcf", 20)));
}

TEST_CASE("countCyclesOfLength on known graphs") {
    CHECK(countCyclesOfLength(oracle::cycle(5), 5) == 1);
    CHECK(countCyclesOfLength(oracle::complete(4), 3) == 4);
    CHECK(countCyclesOfLength(oracle::petersen(), 5) == 12);
    CHECK(oracle::cycleCount(oracle::petersen(), 5) == 12);
    for (int n = 3; n <= 12; ++n) CHECK(countCyclesOfLength(oracle::cycle(n), n) == 1);
    CHECK(countCyclesOfLength(oracle::complete(4), 4) == 3);
}

TEST_CASE("countCyclesOfLength agrees with brute force") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = oracle::randomGraph(rng, n, 0.5);
        for (int L = 3; L <= std::min(n, 6); ++L) {
            CAPTURE(encodeGraph6(g));
            CAPTURE(L);
            CHECK(countCyclesOfLength(g, L) == oracle::cycleCount(g, L));
        }
    }
}

TEST_CASE("restricted cycle count agrees with inclusion-exclusion oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g = oracle::randomGraph(rng, n, 0.5);
        auto edges = g.edges();
        if (edges.empty()) continue;
        std::vector<Edge> marked;
        for (const Edge& e : edges)
            if (rng() % 3 == 0) marked.push_back(e);
        for (int L = 3; L <= std::min(n, 6); ++L) {
            CAPTURE(encodeGraph6(g));
            CAPTURE(L);
            CAPTURE(marked.size());
            CHECK(countCyclesOfLength(g, L, marked) == oracle::cycleCountTouching(g, L, marked));
        }
    }
}

TEST_CASE("degreeSummary") {
    CHECK(degreeSummary(oracle::cycle(5)) == DegreeSummary{2, 2, true});
    Graph star(4);
    star.addEdge(0, 1);
    star.addEdge(0, 2);
    star.addEdge(0, 3);
    CHECK(degreeSummary(star) == DegreeSummary{1, 3, false});
    CHECK(degreeSummary(loadLcfFixture("lcf_6_11_66.lcf", 11)) == DegreeSummary{5, 5, true});
}

TEST_CASE("removeVertices relabels compactly") {
    Graph g = oracle::cycle(5);
    std::vector<int> drop{0};
    Graph h = removeVertices(g, drop);
    CHECK(h.order() == 4);
    CHECK(h.edgeCount() == 3);  // the path 1-2-3-4 relabelled to 0-1-2-3
    CHECK(h.hasEdge(0, 1));
    CHECK(h.hasEdge(2, 3));
    CHECK_FALSE(h.hasEdge(0, 3));
}
