#include <set>

#include "doctest.h"
#include "ngk/canonical.hpp"
#include "ngk/codecs.hpp"
#include "ngk/coloring.hpp"
#include "ngk/constructions.hpp"
#include "ngk/enumerate.hpp"
#include "oracles.hpp"

using namespace ngk;

namespace {

// Independent oracle: all labelled graphs on n vertices filtered by a
// predicate, deduplicated by canonical code.
template <typename Pred>
std::size_t bruteClassCount(int n, Pred&& keep) {
    std::set<CanonCode> classes;
    std::vector<Edge> all;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) all.emplace_back(u, v);
    const int pairs = static_cast<int>(all.size());
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        Graph g(n);
        for (int i = 0; i < pairs; ++i)
            if ((mask >> i) & 1) g.addEdge(all[i].first, all[i].second);
        if (keep(g)) classes.insert(canonicalize(toSmallGraph(g)).code);
    }
    return classes.size();
}

}  // namespace

TEST_CASE("canonical codes classify isomorphs") {
    // C5 relabelled arbitrarily has the same code; the path does not
    SmallGraph a, b, p;
    a.n = b.n = p.n = 5;
    for (int i = 0; i < 5; ++i) a.addEdge(i, (i + 1) % 5);
    int perm[5] = {3, 0, 4, 2, 1};
    for (int i = 0; i < 5; ++i) b.addEdge(perm[i], perm[(i + 1) % 5]);
    for (int i = 0; i + 1 < 5; ++i) p.addEdge(i, i + 1);
    CHECK(canonicalize(a).code == canonicalize(b).code);
    CHECK(canonicalize(a).code != canonicalize(p).code);

    // marked codes separate orbits: in the path, ends vs middle
    CHECK(markedCanonCode(p, 0) == markedCanonCode(p, 4));
    CHECK(markedCanonCode(p, 1) == markedCanonCode(p, 3));
    CHECK(markedCanonCode(p, 0) != markedCanonCode(p, 2));
    // in the cycle every vertex is alike
    for (int v = 1; v < 5; ++v) CHECK(markedCanonCode(a, v) == markedCanonCode(a, 0));
}

TEST_CASE("generator counts match brute-force isomorphism classes up to n=6") {
    const std::int64_t expected[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        GenerationConstraints c;
        c.maxOrder = n;
        std::uint64_t count = generate(c, [](const Graph&) { return true; });
        CAPTURE(n);
        CHECK(count == static_cast<std::uint64_t>(expected[n - 1]));
        if (n <= 5) CHECK(count == static_cast<std::uint64_t>(oracle::isoClassesBrute(n)));
    }
}

TEST_CASE("generator count at n=7 matches the Burnside count") {
    GenerationConstraints c;
    c.maxOrder = 7;
    CHECK(generate(c, [](const Graph&) { return true; }) ==
          static_cast<std::uint64_t>(oracle::isoClassesBurnside(7)));
    CHECK(oracle::isoClassesBurnside(7) == 1044);
}

TEST_CASE("constrained generation: the five-cycle is the only tight fit") {
    GenerationConstraints c;
    c.maxOrder = 5;
    c.girthMin = 5;
    c.minDegree = 2;
    c.maxDegree = 2;
    std::vector<Graph> seen;
    std::uint64_t count = generate(c, [&](const Graph& g) {
        seen.push_back(g);
        return true;
    });
    REQUIRE(count == 1);
    CHECK(girth(seen[0]) == 5);
    CHECK(degreeSummary(seen[0]) == DegreeSummary{2, 2, true});
}

TEST_CASE("eleven isomorphism classes on exactly four vertices") {
    GenerationConstraints c;
    c.maxOrder = 4;
    CHECK(generate(c, [](const Graph&) { return true; }) == 11);
}

TEST_CASE("every visited graph satisfies the constraints") {
    GenerationConstraints c;
    c.maxOrder = 8;
    c.girthMin = 5;
    c.minDegree = 2;
    c.maxDegree = 3;
    std::set<CanonCode> codes;
    generate(c, [&](const Graph& g) {
        CHECK(g.order() == 8);
        GirthValue gv = girth(g);
        CHECK((!gv || *gv >= 5));
        DegreeSummary d = degreeSummary(g);
        CHECK(d.minDegree >= 2);
        CHECK(d.maxDegree <= 3);
        CHECK(codes.insert(canonicalize(toSmallGraph(g)).code).second);  // no isomorphs
        return true;
    });
}

TEST_CASE("constrained generation counts match labelled brute force") {
    for (int n = 3; n <= 6; ++n) {
        CAPTURE(n);
        GenerationConstraints c;
        c.maxOrder = n;
        c.girthMin = 4;
        CHECK(generate(c, [](const Graph&) { return true; }) ==
              bruteClassCount(n, [](const Graph& g) { return countCyclesOfLength(g, 3) == 0; }));

        GenerationConstraints deg;
        deg.maxOrder = n;
        deg.maxDegree = 2;
        CHECK(generate(deg, [](const Graph&) { return true; }) ==
              bruteClassCount(n, [](const Graph& g) { return degreeSummary(g).maxDegree <= 2; }));

        if (n >= 3) {
            GenerationConstraints mind;
            mind.maxOrder = n;
            mind.minDegree = 2;
            CHECK(generate(mind, [](const Graph&) { return true; }) ==
                  bruteClassCount(n, [](const Graph& g) {
                      return g.order() > 0 && degreeSummary(g).minDegree >= 2;
                  }));
        }

        GenerationConstraints girth5;
        girth5.maxOrder = n;
        girth5.girthMin = 5;
        CHECK(generate(girth5, [](const Graph&) { return true; }) ==
              bruteClassCount(n, [](const Graph& g) {
                  GirthValue gv = girth(g);
                  return !gv || *gv >= 5;
              }));
    }
}

TEST_CASE("odd-cycle detection is equivalent to 2-colorability") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = oracle::randomGraph(rng, n, 0.35);
        CAPTURE(encodeGraph6(g));
        CHECK(containsOddCycle(g) ==
              (decideKColorable(g, 2).status == ColorStatus::NotColorable));
    }
}

TEST_CASE("the smallest triangle-free 4-chromatic graph has order 11" * doctest::skip()) {
    // Every triangle-free graph through order 10 is 3-colorable; the first
    // counterexample appears at order 11 and is the Mycielskian of the
    // five-cycle. Takes ~half a minute, so it is skipped by default; run
    // with --no-skip.
    GenerationConstraints c;
    c.girthMin = 4;
    c.maxOrder = 10;
    CHECK(certifyAllColorable(c, 3).allColorable);
    c.maxOrder = 11;
    CertifyResult r = certifyAllColorable(c, 3);
    CHECK_FALSE(r.allColorable);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->order() == 11);
    CHECK(canonicalize(toSmallGraph(*r.counterexample)).code ==
          canonicalize(toSmallGraph(mycielski(oracle::cycle(5)))).code);
}

TEST_CASE("visitor can stop the run") {
    GenerationConstraints c;
    c.maxOrder = 6;
    std::uint64_t count = generate(c, [](const Graph&) { return false; });
    CHECK(count == 1);
}

TEST_CASE("the safety cap is enforced") {
    GenerationConstraints c;
    c.maxOrder = 12;
    CHECK_THROWS_AS(generate(c, [](const Graph&) { return true; }), std::invalid_argument);
    CHECK_THROWS_AS(generate(c, [](const Graph&) { return true; }, 17), std::invalid_argument);
    c.maxOrder = 3;
    c.girthMin = 2;
    CHECK_THROWS_AS(generate(c, [](const Graph&) { return true; }), std::invalid_argument);
}

TEST_CASE("certifyAllColorable finds K4 among the order-4 graphs") {
    GenerationConstraints c;
    c.maxOrder = 4;
    CertifyResult r = certifyAllColorable(c, 3);
    CHECK_FALSE(r.allColorable);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->order() == 4);
    CHECK(r.counterexample->edgeCount() == 6);
    // the witness is genuinely not 3-colorable, by both exact methods
    CHECK(decideKColorable(*r.counterexample, 3).status == ColorStatus::NotColorable);
    CHECK(decideKColorable(*r.counterexample, 3, nullptr, ColorBudget::unlimited(), true)
              .status == ColorStatus::NotColorable);
}

TEST_CASE("certifyAllColorable passes on triangle-free graphs through order 8") {
    for (int n = 5; n <= 8; ++n) {
        GenerationConstraints c;
        c.maxOrder = n;
        c.girthMin = 4;
        CertifyResult r = certifyAllColorable(c, 3);
        CAPTURE(n);
        CHECK(r.allColorable);
        CHECK(r.visited > 0);
    }
}
