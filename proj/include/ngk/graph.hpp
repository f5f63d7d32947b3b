#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ngk/bitset.hpp"

namespace ngk {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Neighborhoods are stored as
// bitsets so membership tests and neighborhood intersections run a word at
// a time; those two operations dominate the coloring and cycle-counting
// inner loops.
//
// A Graph value is safe to share across threads once no one mutates it;
// search code mutates a privately owned copy.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    static Graph fromEdges(int order, std::span<const Edge> edges);

    int order() const { return order_; }
    int edgeCount() const { return edgeCount_; }
    int degree(int v) const { return degree_[v]; }
    bool hasEdge(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }

    // Both return false if the edge set was already in the requested state.
    // Self-loops and out-of-range indices are rejected with an exception.
    bool addEdge(int u, int v);
    bool removeEdge(int u, int v);

    // Edges as (u, v) with u < v, sorted ascending.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int order_ = 0;
    int edgeCount_ = 0;
    std::vector<Bitset> adj_;
    std::vector<int> degree_;
};

struct DegreeSummary {
    int minDegree = 0;
    int maxDegree = 0;
    bool isRegular = true;

    friend bool operator==(const DegreeSummary&, const DegreeSummary&) = default;
};

// Girth as the length of the shortest cycle; empty when the graph is a
// forest. Forests show up constantly mid-search, so the "no cycle" case is
// a first-class value rather than a sentinel.
using GirthValue = std::optional<int>;

GirthValue girth(const Graph& g);

// True iff some cycle of length < bound exists. Equivalent to
// girth(g) < bound but stops BFS layers early.
bool containsCycleShorterThan(const Graph& g, int bound);

// Bounded-depth BFS distance test. The incremental form of the short-cycle
// check: inserting edge (u, v) into g keeps girth >= bound iff
// !distanceAtMost(g, u, v, bound - 2).
bool distanceAtMost(const Graph& g, int from, int to, int maxDist);

// True iff g is non-bipartite.
bool containsOddCycle(const Graph& g);

// Exact count of simple cycles of exactly `length` vertices, deduplicated
// over rotation and reflection. The second form counts only cycles that use
// at least one edge from `among`.
std::int64_t countCyclesOfLength(const Graph& g, int length);
std::int64_t countCyclesOfLength(const Graph& g, int length, std::span<const Edge> among);

DegreeSummary degreeSummary(const Graph& g);

// Copy of g with the given vertices deleted and the rest relabelled
// compactly, preserving relative order.
Graph removeVertices(const Graph& g, std::span<const int> drop);

// FNV-1a over the sorted edge list plus order; stable across runs.
std::uint64_t edgeSetHash(const Graph& g);

}  // namespace ngk
