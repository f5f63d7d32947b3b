#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <utility>

#include "ngk/graph.hpp"

namespace ngk {

// Bitmask graphs on at most 16 vertices; the working currency of the
// isomorph-free generator, where canonical forms are computed millions of
// times.
struct SmallGraph {
    int n = 0;
    std::array<std::uint16_t, 16> adj{};

    void addEdge(int u, int v) {
        adj[u] |= static_cast<std::uint16_t>(1u << v);
        adj[v] |= static_cast<std::uint16_t>(1u << u);
    }
    bool hasEdge(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int v) const { return std::popcount(adj[v]); }
};

using CanonCode = std::pair<std::uint64_t, std::uint64_t>;

struct CanonResult {
    CanonCode code{};                        // adjacency bits under the canonical labeling
    std::array<std::int8_t, 16> position{};  // vertex -> canonical position
};

// Canonical labeling by individualization and refinement with automorphism
// pruning. Two graphs (or vertex-colored graphs with equal color-class
// layouts) are isomorphic iff their codes match. `colors`, when given, is an
// initial partition: smaller color values occupy earlier canonical
// positions and vertices never map across color classes.
CanonResult canonicalize(const SmallGraph& g,
                         const std::array<std::int8_t, 16>* colors = nullptr);

// Code of g with one vertex distinguished; equal marked codes mean an
// automorphism maps one mark to the other.
CanonCode markedCanonCode(const SmallGraph& g, int marked);

SmallGraph toSmallGraph(const Graph& g);  // throws above 16 vertices
Graph toGraph(const SmallGraph& g);

}  // namespace ngk
