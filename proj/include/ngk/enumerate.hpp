#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "ngk/graph.hpp"

namespace ngk {

// Constraints for exhaustive isomorph-free generation. Exactly the graphs
// of order maxOrder meeting every constraint are visited; the augmentation
// passes through smaller orders internally.
struct GenerationConstraints {
    int maxOrder = 1;
    int girthMin = 3;
    int minDegree = 0;
    int maxDegree = 15;
};

// Canonical-augmentation generation: one representative per isomorphism
// class. Girth and maximum degree prune during augmentation; the minimum
// degree is a final-order filter with a feasibility prune (a vertex can gain
// at most one edge per future vertex). The visitor returns false to stop
// early. Returns the number of graphs visited.
//
// The default safety cap keeps runs at desk scale; it can be raised to the
// hard limit of 16 vertices.
std::uint64_t generate(const GenerationConstraints& constraints,
                       const std::function<bool(const Graph&)>& visitor, int safetyCap = 11);

struct CertifyResult {
    bool allColorable = true;
    std::optional<Graph> counterexample;
    std::uint64_t visited = 0;
};

// Runs the exact coloring decision over every generated graph, stopping at
// the first one that is not k-colorable.
CertifyResult certifyAllColorable(const GenerationConstraints& constraints, int k,
                                  int safetyCap = 11);

}  // namespace ngk
