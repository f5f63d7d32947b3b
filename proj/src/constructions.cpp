#include "ngk/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <random>
#include <unordered_set>

#include "ngk/codecs.hpp"

namespace ngk {

Graph mycielski(const Graph& g) {
    const int n = g.order();
    Graph out(2 * n + 1);
    const int apex = 2 * n;
    for (auto [u, v] : g.edges()) {
        out.addEdge(u, v);
        out.addEdge(n + u, v);  // shadow of u sees N(u)
        out.addEdge(n + v, u);
    }
    for (int i = 0; i < n; ++i) out.addEdge(n + i, apex);
    return out;
}

namespace {

std::vector<int> sortedUnique(std::span<const int> xs) {
    std::vector<int> v(xs.begin(), xs.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void requireIndependent(const Graph& g, const std::vector<int>& s) {
    for (int v : s)
        if (v < 0 || v >= g.order())
            throw std::out_of_range("set vertex out of range");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.hasEdge(s[i], s[j]))
                throw NotIndependentError("set is not independent: edge " +
                                          std::to_string(s[i]) + "-" + std::to_string(s[j]));
}

}  // namespace

DroogendijkParts droogendijkParts(const Graph& g, std::span<const int> sIn) {
    DroogendijkParts parts;
    parts.s = sortedUnique(sIn);
    requireIndependent(g, parts.s);

    const int n = g.order();
    Bitset inS(n), inA(n);
    for (int v : parts.s) inS.set(v);
    for (int v : parts.s)
        g.neighbors(v).forEach([&](int w) {
            if (!inS.test(w)) inA.set(w);
        });
    for (int v = 0; v < n; ++v) {
        if (inS.test(v)) continue;
        if (inA.test(v))
            parts.a.push_back(v);
        else
            parts.b.push_back(v);
    }
    parts.constructedOrder = 2 * n + 2 - static_cast<int>(parts.s.size());
    int next = n;
    for (std::size_t i = 0; i < parts.a.size(); ++i) parts.aCopy.push_back(next++);
    for (std::size_t i = 0; i < parts.b.size(); ++i) parts.bCopy.push_back(next++);
    parts.apexAlpha = next++;
    parts.apexBeta = next++;
    return parts;
}

ConditionStatus droogendijkConditionHolds(const Graph& g, std::span<const int> s, int k,
                                          const ColorBudget& budget) {
    DroogendijkParts parts = droogendijkParts(g, s);
    Graph rest = removeVertices(g, parts.s);

    // Relabel A and B into G-S coordinates: dropped vertices are the
    // |S| smallest removed, so each kept vertex shifts down by the number of
    // S-vertices before it.
    std::vector<int> shift(g.order(), 0);
    int seen = 0;
    std::size_t si = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (si < parts.s.size() && parts.s[si] == v) {
            ++si;
            ++seen;
            continue;
        }
        shift[v] = v - seen;
    }

    PaletteConstraint constraint = PaletteConstraint::allowAll(rest.order(), k - 1);
    const std::uint32_t bColors = (k - 2 >= 32) ? ~0u : ((k >= 2) ? (1u << (k - 2)) - 1 : 0u);
    for (int v : parts.b) constraint.restrict(shift[v], bColors);

    ColorDecision d = decideKColorable(rest, k - 1, &constraint, budget);
    switch (d.status) {
        case ColorStatus::Colorable: return ConditionStatus::Fails;
        case ColorStatus::NotColorable: return ConditionStatus::Holds;
        default: return ConditionStatus::BudgetExhausted;
    }
}

Graph droogendijkConstruct(const Graph& g, std::span<const int> s) {
    DroogendijkParts parts = droogendijkParts(g, s);
    Graph out(parts.constructedOrder);
    for (auto [u, v] : g.edges()) out.addEdge(u, v);
    for (std::size_t i = 0; i < parts.a.size(); ++i)
        g.neighbors(parts.a[i]).forEach([&](int w) { out.addEdge(parts.aCopy[i], w); });
    for (std::size_t i = 0; i < parts.b.size(); ++i)
        g.neighbors(parts.b[i]).forEach([&](int w) { out.addEdge(parts.bCopy[i], w); });
    for (int v : parts.s) out.addEdge(parts.apexAlpha, v);
    for (int c : parts.bCopy) out.addEdge(parts.apexAlpha, c);
    for (int c : parts.aCopy) out.addEdge(parts.apexBeta, c);
    for (int c : parts.bCopy) out.addEdge(parts.apexBeta, c);
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct StreamClock {
    std::optional<Clock::time_point> deadline;
    explicit StreamClock(const StreamLimits& l) {
        if (l.wallClockSeconds)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(*l.wallClockSeconds));
    }
    bool expired() const { return deadline && Clock::now() > *deadline; }
};

// Advances `cur` to the lexicographically next ascending independent tuple
// of the given size; pass an empty vector to start. Returns false when the
// sequence is exhausted.
bool nextIndependentSet(const Graph& g, std::vector<int>& cur, int size) {
    const int n = g.order();
    auto indepWithPrefix = [&](int v, int prefixLen) {
        for (int i = 0; i < prefixLen; ++i)
            if (g.hasEdge(cur[i], v)) return false;
        return true;
    };
    int level;
    if (cur.empty()) {
        cur.assign(size, -1);
        level = 0;
    } else {
        level = size - 1;
    }
    while (level >= 0) {
        int v = cur[level] + 1;
        while (v < n && !indepWithPrefix(v, level)) ++v;
        if (v >= n) {
            cur[level] = -1;  // reset; the level below will restart us here
            --level;
            continue;
        }
        cur[level] = v;
        if (level == size - 1) return true;
        ++level;
        cur[level] = cur[level - 1];  // candidates at this level start past v
    }
    cur.clear();
    return false;
}

}  // namespace

StreamOutcome searchQualifyingSets(const Graph& g, int k, int maxSetSize,
                                   const StreamLimits& limits, std::uint64_t seed,
                                   const std::function<bool(const QualifyingCandidate&)>& emit,
                                   bool skipEmptyB) {
    StreamOutcome outcome;
    StreamClock clock(limits);
    std::mt19937_64 rng(seed);

    for (int size = 1; size <= maxSetSize; ++size) {
        std::vector<int> cur;
        while (nextIndependentSet(g, cur, size)) {
            if (clock.expired()) {
                outcome.status = StreamStatus::BudgetExhausted;
                return outcome;
            }
            std::vector<int> s(cur.begin(), cur.begin() + size);
            DroogendijkParts parts = droogendijkParts(g, s);
            if (skipEmptyB && parts.b.empty()) continue;

            ConditionStatus cond = droogendijkConditionHolds(g, s, k, limits.perDecision);
            if (cond == ConditionStatus::Fails) continue;
            if (cond == ConditionStatus::BudgetExhausted) {
                outcome.status = StreamStatus::BudgetExhausted;
                return outcome;
            }

            QualifyingCandidate cand{s, droogendijkConstruct(g, s),
                                     QualifyingCandidate::Verdict::Indeterminate, std::nullopt};
            const std::uint64_t screenSeed = rng();
            if (auto witness = randomColourable(k, cand.constructed, {}, screenSeed)) {
                // The witness is an exact settlement: chi <= k, and the input
                // is an induced subgraph, so chi = k.
                cand.verdict = QualifyingCandidate::Verdict::Refuted;
                cand.chromatic = k;
            } else {
                ColorDecision d =
                    decideKColorable(cand.constructed, k, nullptr, limits.perDecision);
                if (d.status == ColorStatus::NotColorable) {
                    // chi <= k+1 holds for every output of the construction,
                    // so refuting k pins chi = k+1.
                    cand.verdict = QualifyingCandidate::Verdict::Confirmed;
                    cand.chromatic = k + 1;
                } else if (d.status == ColorStatus::Colorable) {
                    cand.verdict = QualifyingCandidate::Verdict::Refuted;
                    cand.chromatic = k;
                }
            }
            ++outcome.emitted;
            if (!emit(cand)) {
                outcome.status = StreamStatus::StoppedByVisitor;
                return outcome;
            }
            if (limits.maxEmitted && outcome.emitted >= *limits.maxEmitted) {
                outcome.status = StreamStatus::BudgetExhausted;
                return outcome;
            }
        }
    }
    return outcome;
}

namespace {

// chi(h) == k given chi can only have moved by one from a k-chromatic
// neighbour: screen with the randomized colorer, settle exactly.
// direction > 0 for additions (chi >= k already), < 0 for removals
// (chi <= k already).
bool chromaticStaysK(const Graph& h, int k, int direction, std::uint64_t seed,
                     const ColorBudget& budget, bool& budgetBlown) {
    if (direction > 0) {
        if (randomColourable(k, h, {}, seed)) return true;
        ColorDecision d = decideKColorable(h, k, nullptr, budget);
        if (d.status == ColorStatus::BudgetExhausted) budgetBlown = true;
        return d.status == ColorStatus::Colorable;
    }
    if (randomColourable(k - 1, h, {}, seed)) return false;
    ColorDecision d = decideKColorable(h, k - 1, nullptr, budget);
    if (d.status == ColorStatus::BudgetExhausted) budgetBlown = true;
    return d.status == ColorStatus::NotColorable;
}

}  // namespace

StreamOutcome exploreEdgePerturbations(const Graph& g, int k, int gMin, int depth,
                                       const StreamLimits& limits, std::uint64_t seed,
                                       const std::function<bool(const Graph&)>& emit) {
    StreamOutcome outcome;
    StreamClock clock(limits);
    std::mt19937_64 rng(seed);
    std::unordered_set<std::string> seen;
    std::deque<std::pair<Graph, int>> frontier;

    seen.insert(encodeGraph6(g));
    frontier.emplace_back(g, 0);

    while (!frontier.empty()) {
        if (clock.expired()) {
            outcome.status = StreamStatus::BudgetExhausted;
            return outcome;
        }
        auto [current, d] = std::move(frontier.front());
        frontier.pop_front();

        ++outcome.emitted;
        if (!emit(current)) {
            outcome.status = StreamStatus::StoppedByVisitor;
            return outcome;
        }
        if (limits.maxEmitted && outcome.emitted >= *limits.maxEmitted) {
            outcome.status = StreamStatus::BudgetExhausted;
            return outcome;
        }
        if (d >= depth) continue;

        const int n = current.order();
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (clock.expired()) {
                    outcome.status = StreamStatus::BudgetExhausted;
                    return outcome;
                }
                Graph next = current;
                bool budgetBlown = false;
                if (current.hasEdge(u, v)) {
                    next.removeEdge(u, v);
                    if (!chromaticStaysK(next, k, -1, rng(), limits.perDecision, budgetBlown)) {
                        if (budgetBlown) {
                            outcome.status = StreamStatus::BudgetExhausted;
                            return outcome;
                        }
                        continue;
                    }
                } else {
                    // Additions must not close a short cycle.
                    if (distanceAtMost(current, u, v, gMin - 2)) continue;
                    next.addEdge(u, v);
                    if (!chromaticStaysK(next, k, +1, rng(), limits.perDecision, budgetBlown)) {
                        if (budgetBlown) {
                            outcome.status = StreamStatus::BudgetExhausted;
                            return outcome;
                        }
                        continue;
                    }
                }
                if (seen.insert(encodeGraph6(next)).second)
                    frontier.emplace_back(std::move(next), d + 1);
            }
        }
    }
    return outcome;
}

}  // namespace ngk
