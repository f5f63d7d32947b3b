#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ngk/coloring.hpp"
#include "ngk/graph.hpp"

namespace ngk {

// A graph of order r*s with the shift v_x -> v_{(x+r) mod rs} as an
// automorphism, described by signed offsets per vertex row. Rows are kept as
// listed (published tables repeat orbits to make degrees visible); realize()
// unions duplicates silently.
struct LcfScheme {
    int rowCount = 0;     // r
    int cycleLength = 0;  // s
    std::vector<std::vector<int>> rows;

    int order() const { return rowCount * cycleLength; }

    friend bool operator==(const LcfScheme&, const LcfScheme&) = default;
};

// One orbit of candidate edges under the shift. Of the up-to-two
// (row, offset) descriptions of the same edge set, the canonical one
// minimizes (row, |offset|, sign-is-negative).
struct EdgeOrbit {
    int row = 0;
    int offset = 0;
    std::vector<Edge> edges;  // sorted, deduplicated

    friend bool operator==(const EdgeOrbit& x, const EdgeOrbit& y) {
        return x.row == y.row && x.offset == y.offset;
    }
};

// Canonical (row, offset) description of the orbit containing (row, offset).
std::pair<int, int> canonicalOrbitKey(int r, int s, int row, int offset);

// The orbit's edge set, materialized. Offsets congruent to 0 mod rs are
// rejected (self-loops).
EdgeOrbit makeOrbit(int r, int s, int row, int offset);

// Every loop-free edge orbit exactly once, canonical keys ascending.
std::vector<EdgeOrbit> getOrbits(int r, int s);

Graph realize(const LcfScheme& scheme);

// True iff x -> (x+r) mod n maps the edge set onto itself.
bool shiftPreservesEdges(const Graph& g, int r);

// Rewrites a scheme so every orbit appears exactly once under its canonical
// key, rows sorted.
LcfScheme canonicalScheme(const LcfScheme& scheme);

// Adds the orbit's edges unless some insertion would close a cycle shorter
// than g; on failure the builder is restored and false returned. The check
// per edge is the incremental distance test, so the builder must already
// have girth >= g.
bool addOrbitIfGirthSafe(Graph& working, const EdgeOrbit& orb, int g);

// True iff the orbit could be added to `working` without creating a cycle
// shorter than g. `working` is left unchanged.
bool orbitGirthSafe(const Graph& working, const EdgeOrbit& orb, int g);

// Of the individually addable orbits in olist, the ones creating the
// maximum number of new (g+1)-cycles; ties all returned, order preserved.
std::vector<EdgeOrbit> bestOrbits(const std::vector<EdgeOrbit>& olist, const Graph& working,
                                  int g);

// Filters olist (minus newOrbit) down to orbits still addable after
// newOrbit landed. Orbits whose endpoints are farther than g-1 from every
// endpoint of newOrbit cannot have been invalidated and are kept untested.
std::vector<EdgeOrbit> updateOrbits(const std::vector<EdgeOrbit>& olist,
                                    const EdgeOrbit& newOrbit, const Graph& working, int g);

struct SearchBudget {
    std::optional<std::uint64_t> maxOuterIterations;
    std::optional<double> wallClockSeconds;
    std::uint64_t seed = 1;
};

struct LcfSearchResult {
    Graph graph;
    LcfScheme scheme;  // the placed orbits, one canonical entry each
    std::uint64_t outerIterations = 0;
};

// One line per screened build, so survivors can be re-verified after the
// fact with the seed that produced them.
struct SearchScreenLog {
    std::uint64_t iteration = 0;
    int edgeCount = 0;
    bool heuristicFound = false;  // the randomized k-colorer succeeded
    std::uint64_t seed = 0;
};
using SearchLogger = std::function<void(const SearchScreenLog&)>;

// Greedy randomized search: shuffle the orbit list, add whatever stays
// girth-safe, and return the first build the randomized k-colorer fails on.
std::optional<LcfSearchResult> basicSearch(int g, int r, int s, int k,
                                           const SearchBudget& budget,
                                           const LocalSearchEffort& colorEffort = {},
                                           const SearchLogger& logger = {});

struct EvenGirthHeuristics {
    // Probability of taking a uniformly random girth-safe orbit instead of
    // calling bestOrbits, which is where the time goes.
    double randomPickFraction = 0.25;
    // Once this many edges are placed, a build that is still bipartite is
    // abandoned. Unset: half the edge count of the first completed build.
    std::optional<int> earlyOddCycleEdgeThreshold;
};

// The refinement for even girth: repeatedly add an orbit drawn from the
// (g+1)-cycle-maximizing set, keep the candidate list girth-safe
// incrementally, and bail out early on builds that stay bipartite too long.
std::optional<LcfSearchResult> evenGirthSearch(int g, int r, int s, int k,
                                               const SearchBudget& budget,
                                               const EvenGirthHeuristics& heuristics = {},
                                               const LocalSearchEffort& colorEffort = {},
                                               const SearchLogger& logger = {});

// Deterministic complete search at toy scale (rs <= 24): walks every
// girth-safe orbit subset, screens the maximal ones, and emits each build
// the randomized k-colorer fails on. Returns the number of maximal builds
// screened; the visitor returns false to stop.
std::uint64_t exhaustiveSearch(int g, int r, int s, int k,
                               const std::function<bool(const LcfSearchResult&)>& emit,
                               std::uint64_t colorSeed = 1,
                               const LocalSearchEffort& colorEffort = {},
                               const SearchLogger& logger = {});

// Text format of the published tables: one "i: t1 t2 ..." row per vertex
// row. The cycle length cannot be inferred from the rows, so it is passed
// alongside the text.
LcfScheme parseLcfTable(std::string_view text, int cycleLength);
std::string emitLcfTable(const LcfScheme& scheme);

}  // namespace ngk
