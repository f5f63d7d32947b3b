#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ngk/coloring.hpp"
#include "ngk/graph.hpp"

namespace ngk {

class NotIndependentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mycielskian: order 2n+1, triangle-freeness preserved, chromatic number
// raised by exactly one. Vertex i's shadow is n+i; the apex is 2n.
Graph mycielski(const Graph& g);

// The pieces of the doubling construction applied to (G, S): S independent,
// A its neighbourhood, B everything else. New vertices are numbered original
// 0..n-1, then copies of A in ascending order of A, then copies of B, then
// the two apexes.
struct DroogendijkParts {
    std::vector<int> s, a, b;       // sorted ascending
    std::vector<int> aCopy, bCopy;  // aCopy[i] is the new index of a[i]'s copy
    int apexAlpha = -1, apexBeta = -1;
    int constructedOrder = 0;       // 2n + 2 - |S|
};

DroogendijkParts droogendijkParts(const Graph& g, std::span<const int> s);

enum class ConditionStatus { Holds, Fails, BudgetExhausted };

// The qualifying condition on (G, S, k): no proper (k-1)-coloring of G-S
// keeps all of B within k-2 colors. Decided as a single constrained-palette
// call; a coloring found means the condition fails. With B empty this
// degenerates to plain (k-1)-uncolorability of G-S.
ConditionStatus droogendijkConditionHolds(const Graph& g, std::span<const int> s, int k,
                                          const ColorBudget& budget = ColorBudget::unlimited());

// The doubled graph: copies wired to their originals' neighbourhoods, alpha
// joined to S and the B copies, beta to both copy sets. Triangle-free when
// the input is.
Graph droogendijkConstruct(const Graph& g, std::span<const int> s);

struct QualifyingCandidate {
    std::vector<int> set;
    Graph constructed;
    enum class Verdict { Confirmed, Refuted, Indeterminate } verdict;
    std::optional<int> chromatic;  // exact chi of the construction when settled
};

struct StreamLimits {
    std::optional<std::uint64_t> maxEmitted;
    std::optional<double> wallClockSeconds;
    ColorBudget perDecision = ColorBudget::unlimited();
};

enum class StreamStatus { Completed, StoppedByVisitor, BudgetExhausted };

struct StreamOutcome {
    StreamStatus status = StreamStatus::Completed;
    std::uint64_t emitted = 0;
};

// Enumerates independent sets of size 1..maxSetSize (size ascending, then
// lexicographic), keeps those passing the qualifying condition, builds the
// construction, screens it with the randomized colorer and settles its
// chromatic number exactly. Candidates are emitted with their verdicts;
// Confirmed means chi = k+1 was proven. The visitor returns false to stop.
// `skipEmptyB` drops sets whose neighbourhood covers all other vertices.
StreamOutcome searchQualifyingSets(const Graph& g, int k, int maxSetSize,
                                   const StreamLimits& limits, std::uint64_t seed,
                                   const std::function<bool(const QualifyingCandidate&)>& emit,
                                   bool skipEmptyB = false);

// Breadth-limited exploration of single-edge additions and removals that
// keep girth >= gMin and chi = k (chi screened heuristically, then settled
// exactly before a graph is emitted or expanded). Revisits are cut by the
// labelled edge-set key. The start graph itself is emitted first.
StreamOutcome exploreEdgePerturbations(const Graph& g, int k, int gMin, int depth,
                                       const StreamLimits& limits, std::uint64_t seed,
                                       const std::function<bool(const Graph&)>& emit);

}  // namespace ngk
