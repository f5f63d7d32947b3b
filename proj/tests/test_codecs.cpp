#include <random>

#include "doctest.h"
#include "ngk/codecs.hpp"
#include "oracles.hpp"

using namespace ngk;

TEST_CASE("graph6 frozen encodings") {
    CHECK(encodeGraph6(Graph(1)) == "@");
    Graph k2(2);
    k2.addEdge(0, 1);
    CHECK(encodeGraph6(k2) == "A_");
    CHECK(decodeGraph6("@") == Graph(1));
    CHECK(decodeGraph6("A_") == k2);
    // C5 in the standard encoding
    CHECK(decodeGraph6(encodeGraph6(oracle::cycle(5))) == oracle::cycle(5));
}

TEST_CASE("graph6 round-trip on random graphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = static_cast<int>(rng() % 51);
        Graph g = oracle::randomGraph(rng, n, 0.3);
        CHECK(decodeGraph6(encodeGraph6(g)) == g);
    }
}

TEST_CASE("graph6 extended order form") {
    for (int n : {62, 63, 64, 100}) {
        std::mt19937_64 rng(n);
        Graph g = oracle::randomGraph(rng, n, 0.05);
        std::string enc = encodeGraph6(g);
        if (n >= 63) {
            CHECK(enc[0] == '~');
            CHECK(enc[1] != '~');
        }
        CHECK(decodeGraph6(enc) == g);
    }
}

TEST_CASE("graph6 decode errors carry byte offsets") {
    CHECK_THROWS_AS(decodeGraph6(""), CodecError);
    // byte 1 below the printable range
    try {
        decodeGraph6("A ");
        FAIL("expected CodecError");
    } catch (const CodecError& e) {
        CHECK(e.byteOffset == 1);
    }
    // truncated: order 5 needs 2 data bytes
    CHECK_THROWS_AS(decodeGraph6("D"), CodecError);
    // trailing garbage
    CHECK_THROWS_AS(decodeGraph6("A_?"), CodecError);
    // the no-edge graph on two vertices decodes fine
    CHECK(decodeGraph6("A?") == Graph(2));
}

TEST_CASE("graph6 nonzero padding rejected") {
    // order 2 has 1 significant bit and 5 padding bits; 63+1 sets the lowest pad
    std::string bad;
    bad.push_back(static_cast<char>(2 + 63));
    bad.push_back(static_cast<char>(63 + 1));
    CHECK_THROWS_AS(decodeGraph6(bad), CodecError);
}

TEST_CASE("adjacency list parses, symmetrizes, and round-trips") {
    Graph k2 = parseAdjacencyList("0: 1\n1: 0");
    CHECK(k2.order() == 2);
    CHECK(k2.hasEdge(0, 1));

    // an edge listed from one endpoint only
    Graph oneSided = parseAdjacencyList("0: 1 2\n2:");
    CHECK(oneSided.order() == 3);
    CHECK(oneSided.hasEdge(0, 1));
    CHECK(oneSided.hasEdge(0, 2));

    Graph c5 = oracle::cycle(5);
    CHECK(parseAdjacencyList(emitAdjacencyList(c5)) == c5);
}

TEST_CASE("adjacency list continuation lines") {
    // wrapped rows: leading whitespace or no label continue the previous row
    Graph a = parseAdjacencyList("0: 1 2\n   3 4\n4:");
    Graph b = parseAdjacencyList("0: 1 2 3 4");
    CHECK(a == b);
    Graph c = parseAdjacencyList("0: 1 2\n3 4\n4:");
    CHECK(c == b);
}

TEST_CASE("adjacency list errors") {
    CHECK_THROWS_AS(parseAdjacencyList("0: 5", 3), CodecError);      // beyond declared order
    CHECK_THROWS_AS(parseAdjacencyList("7: 1", 3), CodecError);      // label beyond order
    CHECK_THROWS_AS(parseAdjacencyList("0: x", 3), CodecError);      // non-numeric
    CHECK_THROWS_AS(parseAdjacencyList("0: 0", 3), CodecError);      // self-loop
    CHECK_THROWS_AS(parseAdjacencyList("1 2 3"), CodecError);        // continuation first
}

TEST_CASE("emit lists every vertex ascending") {
    Graph g(3);
    g.addEdge(2, 0);
    CHECK(emitAdjacencyList(g) == "0: 2\n1:\n2: 0\n");
}
