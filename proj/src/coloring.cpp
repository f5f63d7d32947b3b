#include "ngk/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <future>
#include <random>
#include <stdexcept>

namespace ngk {

bool isProperColoring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (c.assignment[v] < 0 || c.assignment[v] >= c.colorCount) return false;
    for (auto [u, v] : g.edges())
        if (c.assignment[u] == c.assignment[v]) return false;
    return true;
}

PaletteConstraint PaletteConstraint::allowAll(int order, int k) {
    return {std::vector<std::uint32_t>(order, (k >= 32 ? ~0u : (1u << k) - 1))};
}

bool PaletteConstraint::permits(const Coloring& c) const {
    for (std::size_t v = 0; v < allowed.size(); ++v)
        if (!((allowed[v] >> c.assignment[v]) & 1)) return false;
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetTracker {
    std::optional<Clock::time_point> deadline;
    std::optional<std::uint64_t> nodeLimit;
    std::uint64_t nodes = 0;

    explicit BudgetTracker(const ColorBudget& b) {
        if (b.timeLimitSeconds)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(*b.timeLimitSeconds));
        nodeLimit = b.nodeLimit;
    }

    bool blown() {
        ++nodes;
        if (nodeLimit && nodes > *nodeLimit) return true;
        if (deadline && (nodes & 1023) == 0 && Clock::now() > *deadline) return true;
        return false;
    }
};

std::vector<int> greedyClique(const Graph& g) {
    const int n = g.order();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> best;
    const int seeds = std::min(n, 8);
    for (int si = 0; si < seeds; ++si) {
        std::vector<int> q{order[si]};
        Bitset common = g.neighbors(order[si]);
        for (int cand : order) {
            if (cand == order[si] || !common.test(cand)) continue;
            q.push_back(cand);
            Bitset merged(n);
            g.neighbors(cand).forEach([&](int v) {
                if (common.test(v)) merged.set(v);
            });
            common = merged;
        }
        if (q.size() > best.size()) best = q;
    }
    if (best.empty() && n > 0) best = {0};
    return best;
}

// Exact kernel: minimum-remaining-values vertex choice with forced-move
// propagation and an undo trail. Without a palette constraint, colors are
// interchangeable, so a greedy clique is preassigned 0,1,2,... and each
// decision may open at most one fresh color index.
struct ExactSolver {
    const Graph& g;
    int n, k;
    bool symBreak;
    std::vector<std::uint32_t> allowed;
    std::vector<int> color;
    std::vector<std::pair<int, std::uint32_t>> trail;  // (vertex, removed bits)
    std::vector<int> assigned;
    std::vector<std::pair<int, int>> forced;  // scratch queue
    int maxUsed = -1;
    BudgetTracker budget;

    enum class R { Found, Exhausted, Budget };

    ExactSolver(const Graph& g, int k, const PaletteConstraint* constraint,
                const ColorBudget& b)
        : g(g), n(g.order()), k(k), symBreak(constraint == nullptr), budget(b) {
        const std::uint32_t full = (k >= 32 ? ~0u : (1u << k) - 1);
        allowed.assign(n, full);
        if (constraint) {
            for (int v = 0; v < n; ++v) allowed[v] &= constraint->allowed[v];
        }
        color.assign(n, -1);
    }

    bool assignAndPropagate(int v, int c) {
        forced.clear();
        forced.emplace_back(v, c);
        std::size_t qi = 0;
        while (qi < forced.size()) {
            auto [x, cx] = forced[qi++];
            if (color[x] != -1) {
                if (color[x] != cx) return false;
                continue;
            }
            color[x] = cx;
            assigned.push_back(x);
            maxUsed = std::max(maxUsed, cx);
            const std::uint32_t bit = 1u << cx;
            bool dead = false;
            g.neighbors(x).forEach([&](int w) {
                if (dead || color[w] != -1 || !(allowed[w] & bit)) return;
                allowed[w] &= ~bit;
                trail.emplace_back(w, bit);
                if (allowed[w] == 0)
                    dead = true;
                else if (std::popcount(allowed[w]) == 1)
                    forced.emplace_back(w, std::countr_zero(allowed[w]));
            });
            if (dead) return false;
        }
        return true;
    }

    void undoTo(std::size_t trailMark, std::size_t assignedMark) {
        while (trail.size() > trailMark) {
            auto [w, bits] = trail.back();
            trail.pop_back();
            allowed[w] |= bits;
        }
        while (assigned.size() > assignedMark) {
            color[assigned.back()] = -1;
            assigned.pop_back();
        }
    }

    int pickVertex() const {
        int best = -1, bestCount = 33, bestDeg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            int c = std::popcount(allowed[v]);
            int d = g.degree(v);
            if (c < bestCount || (c == bestCount && d > bestDeg)) {
                best = v;
                bestCount = c;
                bestDeg = d;
            }
        }
        return best;
    }

    R search() {
        if (budget.blown()) return R::Budget;
        const int v = pickVertex();
        if (v == -1) return R::Found;
        std::uint32_t mask = allowed[v];
        if (symBreak && maxUsed + 2 < k) mask &= (1u << (maxUsed + 2)) - 1;
        const int savedMax = maxUsed;
        while (mask) {
            const int c = std::countr_zero(mask);
            mask &= mask - 1;
            const std::size_t tm = trail.size(), am = assigned.size();
            if (assignAndPropagate(v, c)) {
                R r = search();
                if (r != R::Exhausted) return r;
            }
            undoTo(tm, am);
            maxUsed = savedMax;
        }
        return R::Exhausted;
    }
};

// Deliberately artless second method for cross-checks: fixed vertex order,
// no propagation, no clique, no fresh-color cap.
struct PlainSolver {
    const Graph& g;
    int k;
    const PaletteConstraint* constraint;
    std::vector<int> color;
    BudgetTracker budget;

    PlainSolver(const Graph& g, int k, const PaletteConstraint* constraint,
                const ColorBudget& b)
        : g(g), k(k), constraint(constraint), color(g.order(), -1), budget(b) {}

    ExactSolver::R search(int v) {
        if (budget.blown()) return ExactSolver::R::Budget;
        if (v == g.order()) return ExactSolver::R::Found;
        for (int c = 0; c < k; ++c) {
            if (constraint && !((constraint->allowed[v] >> c) & 1)) continue;
            bool ok = true;
            g.neighbors(v).forEach([&](int w) {
                if (w < v && color[w] == c) ok = false;
            });
            if (!ok) continue;
            color[v] = c;
            auto r = search(v + 1);
            if (r != ExactSolver::R::Exhausted) return r;
            color[v] = -1;
        }
        return ExactSolver::R::Exhausted;
    }
};

}  // namespace

ColorDecision decideKColorable(const Graph& g, int k, const PaletteConstraint* constraint,
                               const ColorBudget& budget, bool plainBacktracking) {
    if (k > 30) throw std::invalid_argument("color counts above 30 are not supported");
    ColorDecision out;
    if (k < 1) {
        out.status = g.order() == 0 ? ColorStatus::Colorable : ColorStatus::NotColorable;
        if (out.status == ColorStatus::Colorable) out.witness = Coloring{{}, 0};
        return out;
    }
    if (constraint) {
        if (static_cast<int>(constraint->allowed.size()) != g.order())
            throw std::invalid_argument("palette constraint size mismatch");
        for (std::uint32_t m : constraint->allowed)
            if ((m & ((k >= 32 ? ~0u : (1u << k) - 1))) == 0) {
                out.status = ColorStatus::NotColorable;
                return out;
            }
    }

    if (plainBacktracking) {
        PlainSolver solver(g, k, constraint, budget);
        auto r = solver.search(0);
        out.nodesExplored = solver.budget.nodes;
        switch (r) {
            case ExactSolver::R::Found:
                out.status = ColorStatus::Colorable;
                out.witness = Coloring{solver.color, k};
                break;
            case ExactSolver::R::Exhausted:
                out.status = ColorStatus::NotColorable;
                break;
            case ExactSolver::R::Budget:
                out.status = ColorStatus::BudgetExhausted;
                break;
        }
        return out;
    }

    ExactSolver solver(g, k, constraint, budget);
    if (solver.symBreak) {
        std::vector<int> clique = greedyClique(g);
        if (static_cast<int>(clique.size()) > k) {
            out.status = ColorStatus::NotColorable;
            return out;
        }
        int c = 0;
        for (int v : clique) {
            if (!solver.assignAndPropagate(v, c++)) {
                // Forced wipeout from the clique colors alone: since any
                // k-coloring maps the clique to distinct colors, this is an
                // exhaustive refutation, not a heuristic one.
                out.status = ColorStatus::NotColorable;
                return out;
            }
        }
    }
    auto r = solver.search();
    out.nodesExplored = solver.budget.nodes;
    switch (r) {
        case ExactSolver::R::Found:
            out.status = ColorStatus::Colorable;
            out.witness = Coloring{solver.color, k};
            break;
        case ExactSolver::R::Exhausted:
            out.status = ColorStatus::NotColorable;
            break;
        case ExactSolver::R::Budget:
            out.status = ColorStatus::BudgetExhausted;
            break;
    }
    return out;
}

namespace {

Coloring dsaturGreedy(const Graph& g) {
    const int n = g.order();
    Coloring c{std::vector<int>(n, -1), 0};
    std::vector<std::uint64_t> neighborColors(n, 0);  // up to 64 tracked exactly
    for (int step = 0; step < n; ++step) {
        int best = -1, bestSat = -1, bestDeg = -1;
        for (int v = 0; v < n; ++v) {
            if (c.assignment[v] != -1) continue;
            int sat = std::popcount(neighborColors[v]);
            if (sat > bestSat || (sat == bestSat && g.degree(v) > bestDeg)) {
                best = v;
                bestSat = sat;
                bestDeg = g.degree(v);
            }
        }
        int color = 0;
        while (color < 64 && ((neighborColors[best] >> color) & 1)) ++color;
        if (color >= 64) {  // fall back for absurdly dense cases
            std::vector<char> used(n + 1, 0);
            g.neighbors(best).forEach([&](int w) {
                if (c.assignment[w] >= 0) used[c.assignment[w]] = 1;
            });
            color = 0;
            while (used[color]) ++color;
        }
        c.assignment[best] = color;
        c.colorCount = std::max(c.colorCount, color + 1);
        g.neighbors(best).forEach([&](int w) {
            if (color < 64) neighborColors[w] |= std::uint64_t{1} << color;
        });
    }
    return c;
}

ColorBudget remainingBudget(const ColorBudget& total, const BudgetTracker& used) {
    ColorBudget r;
    if (total.nodeLimit)
        r.nodeLimit = *total.nodeLimit > used.nodes ? *total.nodeLimit - used.nodes : 0;
    if (used.deadline) {
        double left = std::chrono::duration<double>(*used.deadline - Clock::now()).count();
        r.timeLimitSeconds = std::max(0.0, left);
    }
    return r;
}

}  // namespace

ChromaticResult chromaticNumber(const Graph& g, const ColorBudget& budget) {
    ChromaticResult out;
    if (g.order() == 0) {
        out.exact = 0;
        out.witness = Coloring{{}, 0};
        return out;
    }
    Coloring greedy = dsaturGreedy(g);
    int upper = greedy.colorCount;
    int lower = std::max<int>(1, static_cast<int>(greedyClique(g).size()));
    out.lower = lower;
    out.upper = upper;
    out.witness = greedy;

    BudgetTracker shared(budget);
    for (int k = lower; k < upper; ++k) {
        ColorDecision d = decideKColorable(g, k, nullptr, remainingBudget(budget, shared));
        shared.nodes += d.nodesExplored;
        out.nodesExplored = shared.nodes;
        if (d.status == ColorStatus::BudgetExhausted) {
            out.lower = k;  // every smaller k was refuted
            return out;
        }
        if (d.status == ColorStatus::Colorable) {
            out.exact = k;
            out.lower = out.upper = k;
            out.witness = std::move(d.witness);
            return out;
        }
        // refuted: chi > k
        out.lower = k + 1;
    }
    out.exact = upper;
    out.lower = upper;
    return out;
}

std::optional<Coloring> randomColourable(int k, const Graph& g, const LocalSearchEffort& effort,
                                         std::uint64_t seed) {
    const int n = g.order();
    if (k < 1) return n == 0 ? std::optional<Coloring>(Coloring{{}, 0}) : std::nullopt;
    if (n == 0) return Coloring{{}, k};
    if (k == 1) {
        if (g.edgeCount() > 0) return std::nullopt;
        return Coloring{std::vector<int>(n, 0), 1};
    }

    const std::uint64_t steps =
        effort.maxStepsPerRestart ? effort.maxStepsPerRestart
                                  : std::max<std::uint64_t>(20000, 250ull * n);
    std::mt19937_64 rng(seed);

    std::vector<int> color(n);
    std::vector<int> conflictCount(n);
    std::vector<int> conflicted;        // vertices with conflictCount > 0
    std::vector<int> posInConflicted(n);
    std::vector<int> colorConflicts(k);

    auto addConflicted = [&](int v) {
        if (posInConflicted[v] >= 0) return;
        posInConflicted[v] = static_cast<int>(conflicted.size());
        conflicted.push_back(v);
    };
    auto dropConflicted = [&](int v) {
        int p = posInConflicted[v];
        if (p < 0) return;
        int last = conflicted.back();
        conflicted[p] = last;
        posInConflicted[last] = p;
        conflicted.pop_back();
        posInConflicted[v] = -1;
    };

    for (int restart = 0; restart < std::max(1, effort.restarts); ++restart) {
        for (int v = 0; v < n; ++v) color[v] = static_cast<int>(rng() % k);
        std::fill(conflictCount.begin(), conflictCount.end(), 0);
        conflicted.clear();
        std::fill(posInConflicted.begin(), posInConflicted.end(), -1);
        for (int v = 0; v < n; ++v)
            g.neighbors(v).forEach([&](int w) {
                if (color[w] == color[v]) ++conflictCount[v];
            });
        for (int v = 0; v < n; ++v)
            if (conflictCount[v] > 0) addConflicted(v);

        for (std::uint64_t step = 0; step < steps && !conflicted.empty(); ++step) {
            int v = conflicted[rng() % conflicted.size()];
            std::fill(colorConflicts.begin(), colorConflicts.end(), 0);
            g.neighbors(v).forEach([&](int w) { ++colorConflicts[color[w]]; });

            int chosen;
            if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < effort.noise) {
                chosen = static_cast<int>(rng() % k);
            } else {
                int best = colorConflicts[0];
                for (int c = 1; c < k; ++c) best = std::min(best, colorConflicts[c]);
                // Uniform choice among minimizers, preferring to leave the
                // current color (plateau moves keep the walk going).
                int count = 0;
                chosen = color[v];
                for (int c = 0; c < k; ++c) {
                    if (colorConflicts[c] != best || c == color[v]) continue;
                    if (rng() % ++count == 0) chosen = c;
                }
                if (count == 0 && colorConflicts[color[v]] != best) {
                    for (int c = 0; c < k; ++c)
                        if (colorConflicts[c] == best) {
                            chosen = c;
                            break;
                        }
                }
            }
            const int old = color[v];
            if (chosen == old) continue;
            color[v] = chosen;
            conflictCount[v] = colorConflicts[chosen];
            if (conflictCount[v] == 0)
                dropConflicted(v);
            else
                addConflicted(v);
            g.neighbors(v).forEach([&](int w) {
                if (color[w] == old) {
                    if (--conflictCount[w] == 0) dropConflicted(w);
                } else if (color[w] == chosen) {
                    if (++conflictCount[w] == 1) addConflicted(w);
                }
            });
        }

        if (conflicted.empty()) {
            Coloring c{color, k};
            if (isProperColoring(g, c)) return c;
        }
    }
    return std::nullopt;
}

CriticalityStatus isVertexCritical(const Graph& g, int k, const ColorBudget& budgetPerDeletion,
                                   int jobs) {
    const int n = g.order();
    std::atomic<bool> refuted{false};
    std::atomic<bool> indeterminate{false};

    auto checkStride = [&](int begin, int stride) {
        for (int v = begin; v < n; v += stride) {
            if (refuted.load()) return;
            std::vector<int> drop{v};
            Graph sub = removeVertices(g, drop);
            if (k - 1 < 1) {
                if (sub.order() > 0) refuted.store(true);
                continue;
            }
            if (randomColourable(k - 1, sub, {}, 0x9e3779b97f4a7c15ull * (v + 1)))
                continue;
            ColorDecision d = decideKColorable(sub, k - 1, nullptr, budgetPerDeletion);
            if (d.status == ColorStatus::NotColorable)
                refuted.store(true);
            else if (d.status == ColorStatus::BudgetExhausted)
                indeterminate.store(true);
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        checkStride(0, 1);
    } else {
        std::vector<std::future<void>> futures;
        for (int j = 0; j < jobs; ++j)
            futures.push_back(std::async(std::launch::async, checkStride, j, jobs));
        for (auto& f : futures) f.get();
    }

    if (refuted.load()) return CriticalityStatus::NotCritical;
    if (indeterminate.load()) return CriticalityStatus::BudgetExhausted;
    return CriticalityStatus::Critical;
}

}  // namespace ngk
