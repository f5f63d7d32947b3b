#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ngk/graph.hpp"

namespace ngk {

struct Coloring {
    std::vector<int> assignment;  // vertex -> color in 0..colorCount-1
    int colorCount = 0;
};

bool isProperColoring(const Graph& g, const Coloring& c);

// Per-vertex allowed color sets as k-bit masks (k <= 31).
struct PaletteConstraint {
    std::vector<std::uint32_t> allowed;

    static PaletteConstraint allowAll(int order, int k);
    void restrict(int vertex, std::uint32_t mask) { allowed[vertex] &= mask; }
    bool permits(const Coloring& c) const;
};

// Resource limits for an exact decision. Default-constructed means
// explicitly unlimited.
struct ColorBudget {
    std::optional<double> timeLimitSeconds;
    std::optional<std::uint64_t> nodeLimit;

    static ColorBudget unlimited() { return {}; }
    static ColorBudget nodes(std::uint64_t n) { return {std::nullopt, n}; }
    static ColorBudget seconds(double s) { return {s, std::nullopt}; }
};

enum class ColorStatus { Colorable, NotColorable, BudgetExhausted };

struct ColorDecision {
    ColorStatus status = ColorStatus::BudgetExhausted;
    std::optional<Coloring> witness;  // present iff Colorable
    std::uint64_t nodesExplored = 0;
};

// Exact k-colorability. Colorable comes with a validated witness;
// NotColorable is proof by exhaustion; BudgetExhausted makes no claim.
//
// The default kernel orders vertices by fewest remaining colors (DSATUR
// flavored), propagates forced assignments, seeds a greedy clique, and caps
// fresh color indices so color permutations are explored once. With a
// palette constraint the colors are distinguishable, so clique seeding and
// the fresh-color cap are disabled. `plainBacktracking` selects the
// deliberately simple second method used for cross-checking.
ColorDecision decideKColorable(const Graph& g, int k,
                               const PaletteConstraint* constraint = nullptr,
                               const ColorBudget& budget = ColorBudget::unlimited(),
                               bool plainBacktracking = false);

struct ChromaticResult {
    std::optional<int> exact;
    int lower = 0;   // proven
    int upper = 0;   // proven, witnessed
    std::optional<Coloring> witness;
    std::uint64_t nodesExplored = 0;
};

// Exact chromatic number when the budget allows, otherwise the best proven
// interval. The budget is shared across the underlying decisions.
ChromaticResult chromaticNumber(const Graph& g, const ColorBudget& budget = ColorBudget::unlimited());

// Knobs for the randomized screening heuristic.
struct LocalSearchEffort {
    int restarts = 4;
    std::uint64_t maxStepsPerRestart = 0;  // 0: scaled from the order
    double noise = 0.06;                   // random-walk fraction of moves
};

// One-sided randomized k-coloring: a returned coloring is always proper;
// absence claims nothing. Deterministic for a fixed (graph, k, effort, seed).
// Built to screen large candidate streams, so it is fast at n in the low
// hundreds.
std::optional<Coloring> randomColourable(int k, const Graph& g,
                                         const LocalSearchEffort& effort = {},
                                         std::uint64_t seed = 1);

enum class CriticalityStatus { Critical, NotCritical, BudgetExhausted };

// Requires chi(g) = k already established by the caller. True criticality
// means every single-vertex deletion is (k-1)-colorable. Deletions are
// screened with the randomized heuristic before the exact kernel runs, and
// fan out over `jobs` threads.
CriticalityStatus isVertexCritical(const Graph& g, int k,
                                   const ColorBudget& budgetPerDeletion = ColorBudget::unlimited(),
                                   int jobs = 1);

}  // namespace ngk
