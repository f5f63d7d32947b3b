#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace ngk {

// n_g(k): smallest order of a k-chromatic graph with girth at least g.
// These three formulas give general lower bounds.

// n_g(k) >= n_g(k-1) + max(k, ceil(3(k-2)/2)) + 1, valid for g >= 4.
std::int64_t lemma1Bound(int g, int k, std::int64_t priorLower);

// Minimum order of a graph with minimum degree d >= 3 and girth g, from
// counting the breadth-first tree around a central vertex (odd g) or edge
// (even g). Non-integral quotients are rounded up.
std::int64_t mooreBound(int minDegree, int girth);

// Closed forms specialised to k-vertex-critical graphs (min degree k-1 and a
// vertex of degree k in the central position), for g in 4..7 and k >= 4:
//   g=4: 3k-3   g=5: k^2-k+1   g=6: 2k^2-4k+3   g=7: k^3-3k^2+3k+1
std::int64_t lemma3Bound(int g, int k);

// Externally established values: exact orders, proven lower bounds, and
// witness-graph upper bounds, each with its citation. Kept as data so new
// results drop in without touching the formulas.
struct AnchorEntry {
    std::optional<std::int64_t> lower;
    std::optional<std::int64_t> upper;
    bool exact = false;
    std::string citation;
};

struct AnchorSet {
    std::map<std::pair<int, int>, AnchorEntry> entries;  // keyed by (g, k)

    static AnchorSet defaults();
    static AnchorSet fromJsonFile(const std::string& path);
    void add(int g, int k, AnchorEntry e) { entries[{g, k}] = std::move(e); }
    const AnchorEntry* find(int g, int k) const;
};

struct BoundsCell {
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;
    bool exact = false;
    std::string lowerProvenance;
    std::string upperProvenance;
};

struct BoundsTable {
    int gMin = 4, gMax = 4, kMin = 4, kMax = 4;
    std::map<std::pair<int, int>, BoundsCell> cells;

    const BoundsCell& at(int g, int k) const { return cells.at({g, k}); }
};

// Fills every (g, k) cell with the max of the applicable formulas and the
// anchor; k runs ascending so the recurrence chains on the freshly computed
// column below. Provenance records which source won each cell.
BoundsTable buildBoundsTable(const AnchorSet& anchors, int gMax, int kMax);

std::string renderBoundsTable(const BoundsTable& t);          // aligned text grid
std::string renderBoundsRecords(const BoundsTable& t);        // line-per-cell key=value

}  // namespace ngk
