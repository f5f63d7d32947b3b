#include "ngk/lcf.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ngk {

namespace {

int mod(long long x, int m) { return static_cast<int>(((x % m) + m) % m); }

// Signed representative with |t| <= n/2; n/2 itself is kept positive.
int normalizeOffset(long long t, int n) {
    int m = mod(t, n);
    if (m == 0) throw std::invalid_argument("offset is a multiple of rs (self-loop orbit)");
    return m <= n / 2 ? m : m - n;
}

}  // namespace

std::pair<int, int> canonicalOrbitKey(int r, int s, int row, int offset) {
    const int n = r * s;
    const int t = normalizeOffset(offset, n);
    const int row1 = mod(row, r);
    // The same edges read from the far endpoint: row shifts by t, offset
    // negates (n/2 is its own negation).
    const int row2 = mod(row1 + t, r);
    const int t2 = (2 * t % n == 0 && t > 0) ? t : normalizeOffset(-static_cast<long long>(t), n);
    auto key = [](int rw, int off) {
        return std::tuple<int, int, int>(rw, std::abs(off), off < 0 ? 1 : 0);
    };
    return key(row1, t) <= key(row2, t2) ? std::make_pair(row1, t) : std::make_pair(row2, t2);
}

EdgeOrbit makeOrbit(int r, int s, int row, int offset) {
    if (r < 1 || s < 2) throw std::invalid_argument("need r >= 1 and s >= 2");
    const int n = r * s;
    auto [cRow, cOff] = canonicalOrbitKey(r, s, row, offset);
    EdgeOrbit orb;
    orb.row = cRow;
    orb.offset = cOff;
    orb.edges.reserve(s);
    for (int j = 0; j < s; ++j) {
        int x = mod(cRow + static_cast<long long>(r) * j, n);
        int y = mod(x + static_cast<long long>(cOff), n);
        orb.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(orb.edges.begin(), orb.edges.end());
    orb.edges.erase(std::unique(orb.edges.begin(), orb.edges.end()), orb.edges.end());
    return orb;
}

std::vector<EdgeOrbit> getOrbits(int r, int s) {
    if (r < 1 || s < 2) throw std::invalid_argument("need r >= 1 and s >= 2");
    const int n = r * s;
    std::vector<EdgeOrbit> out;
    std::set<std::pair<int, int>> seen;
    // Positive offsets reach every orbit; canonical keys (which may carry a
    // negative offset) fold the redundant descriptions.
    for (int row = 0; row < r; ++row)
        for (int t = 1; t <= n / 2; ++t)
            if (seen.insert(canonicalOrbitKey(r, s, row, t)).second)
                out.push_back(makeOrbit(r, s, row, t));
    return out;
}

Graph realize(const LcfScheme& scheme) {
    if (static_cast<int>(scheme.rows.size()) != scheme.rowCount)
        throw std::invalid_argument("scheme row count mismatch");
    const int n = scheme.order();
    Graph g(n);
    for (int row = 0; row < scheme.rowCount; ++row)
        for (int t : scheme.rows[row])
            for (const Edge& e : makeOrbit(scheme.rowCount, scheme.cycleLength, row, t).edges)
                g.addEdge(e.first, e.second);
    return g;
}

bool shiftPreservesEdges(const Graph& g, int r) {
    const int n = g.order();
    if (n == 0 || r <= 0 || n % r != 0) return false;
    for (auto [u, v] : g.edges())
        if (!g.hasEdge((u + r) % n, (v + r) % n)) return false;
    return true;
}

LcfScheme canonicalScheme(const LcfScheme& scheme) {
    LcfScheme out;
    out.rowCount = scheme.rowCount;
    out.cycleLength = scheme.cycleLength;
    out.rows.assign(scheme.rowCount, {});
    std::vector<std::pair<int, int>> keys;
    for (int row = 0; row < scheme.rowCount; ++row)
        for (int t : scheme.rows[row])
            keys.push_back(canonicalOrbitKey(scheme.rowCount, scheme.cycleLength, row, t));
    std::sort(keys.begin(), keys.end(), [](auto x, auto y) {
        return std::tuple(x.first, std::abs(x.second), x.second < 0) <
               std::tuple(y.first, std::abs(y.second), y.second < 0);
    });
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (auto [row, t] : keys) out.rows[row].push_back(t);
    return out;
}

bool addOrbitIfGirthSafe(Graph& working, const EdgeOrbit& orb, int g) {
    std::vector<Edge> added;
    added.reserve(orb.edges.size());
    for (const Edge& e : orb.edges) {
        if (working.hasEdge(e.first, e.second)) continue;
        if (distanceAtMost(working, e.first, e.second, g - 2)) {
            for (const Edge& a : added) working.removeEdge(a.first, a.second);
            return false;
        }
        working.addEdge(e.first, e.second);
        added.push_back(e);
    }
    return true;
}

bool orbitGirthSafe(const Graph& working, const EdgeOrbit& orb, int g) {
    Graph scratch = working;
    return addOrbitIfGirthSafe(scratch, orb, g);
}

std::vector<EdgeOrbit> bestOrbits(const std::vector<EdgeOrbit>& olist, const Graph& working,
                                  int g) {
    std::vector<EdgeOrbit> best;
    std::int64_t bestCount = -1;
    Graph scratch = working;
    for (const EdgeOrbit& orb : olist) {
        std::vector<Edge> added;
        for (const Edge& e : orb.edges)
            if (scratch.addEdge(e.first, e.second)) added.push_back(e);
        const std::int64_t created = countCyclesOfLength(scratch, g + 1, orb.edges);
        for (const Edge& e : added) scratch.removeEdge(e.first, e.second);
        if (created > bestCount) {
            bestCount = created;
            best.clear();
        }
        if (created == bestCount) best.push_back(orb);
    }
    return best;
}

std::vector<EdgeOrbit> updateOrbits(const std::vector<EdgeOrbit>& olist,
                                    const EdgeOrbit& newOrbit, const Graph& working, int g) {
    // Any fresh short cycle mixes edges of a candidate orbit with edges of
    // newOrbit, so it stays within distance g-1 of newOrbit's endpoints.
    // Candidates entirely outside that ball keep their girth-safety.
    const int n = working.order();
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    for (const Edge& e : newOrbit.edges)
        for (int v : {e.first, e.second})
            if (dist[v] < 0) {
                dist[v] = 0;
                queue.push_back(v);
            }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        if (dist[x] >= g - 1) break;
        working.neighbors(x).forEach([&](int y) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        });
    }

    std::vector<EdgeOrbit> out;
    Graph scratch = working;
    for (const EdgeOrbit& orb : olist) {
        if (orb == newOrbit) continue;
        bool near = false;
        for (const Edge& e : orb.edges) {
            if (dist[e.first] >= 0 || dist[e.second] >= 0) {
                near = true;
                break;
            }
        }
        if (!near) {
            out.push_back(orb);
            continue;
        }
        // Orbits are pairwise edge-disjoint, so a successful trial add is
        // undone exactly by removing the orbit's own edges.
        if (addOrbitIfGirthSafe(scratch, orb, g)) {
            for (const Edge& e : orb.edges) scratch.removeEdge(e.first, e.second);
            out.push_back(orb);
        }
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SearchClock {
    std::optional<Clock::time_point> deadline;
    explicit SearchClock(const SearchBudget& b) {
        if (b.wallClockSeconds)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(*b.wallClockSeconds));
    }
    bool expired() const { return deadline && Clock::now() > *deadline; }
};

LcfScheme schemeFromOrbits(int r, int s, const std::vector<EdgeOrbit>& placed) {
    LcfScheme scheme;
    scheme.rowCount = r;
    scheme.cycleLength = s;
    scheme.rows.assign(r, {});
    for (const EdgeOrbit& orb : placed) scheme.rows[orb.row].push_back(orb.offset);
    for (auto& row : scheme.rows)
        std::sort(row.begin(), row.end(), [](int x, int y) {
            return std::pair(std::abs(x), x < 0) < std::pair(std::abs(y), y < 0);
        });
    return scheme;
}

}  // namespace

std::optional<LcfSearchResult> basicSearch(int g, int r, int s, int k,
                                           const SearchBudget& budget,
                                           const LocalSearchEffort& colorEffort,
                                           const SearchLogger& logger) {
    std::vector<EdgeOrbit> olist = getOrbits(r, s);
    std::mt19937_64 rng(budget.seed);
    SearchClock clock(budget);

    for (std::uint64_t iter = 1;; ++iter) {
        if (budget.maxOuterIterations && iter > *budget.maxOuterIterations) return std::nullopt;
        if (clock.expired()) return std::nullopt;

        std::shuffle(olist.begin(), olist.end(), rng);
        Graph working(r * s);
        std::vector<EdgeOrbit> placed;
        for (const EdgeOrbit& orb : olist)
            if (addOrbitIfGirthSafe(working, orb, g)) placed.push_back(orb);

        const std::uint64_t screenSeed = rng();
        const bool found = randomColourable(k, working, colorEffort, screenSeed).has_value();
        if (logger) logger({iter, working.edgeCount(), found, screenSeed});
        if (!found)
            return LcfSearchResult{std::move(working), schemeFromOrbits(r, s, placed), iter};
    }
}

std::optional<LcfSearchResult> evenGirthSearch(int g, int r, int s, int k,
                                               const SearchBudget& budget,
                                               const EvenGirthHeuristics& heuristics,
                                               const LocalSearchEffort& colorEffort,
                                               const SearchLogger& logger) {
    const std::vector<EdgeOrbit> olist = getOrbits(r, s);
    std::mt19937_64 rng(budget.seed);
    SearchClock clock(budget);
    std::optional<int> oddCycleThreshold = heuristics.earlyOddCycleEdgeThreshold;

    // Orbits that alone would close a short cycle can never be placed.
    std::vector<EdgeOrbit> addable;
    {
        const Graph empty(r * s);
        for (const EdgeOrbit& orb : olist)
            if (orbitGirthSafe(empty, orb, g)) addable.push_back(orb);
    }

    for (std::uint64_t iter = 1;; ++iter) {
        if (budget.maxOuterIterations && iter > *budget.maxOuterIterations) return std::nullopt;
        if (clock.expired()) return std::nullopt;

        Graph working(r * s);
        std::vector<EdgeOrbit> candidates = addable;
        std::vector<EdgeOrbit> placed;
        bool abandoned = false;
        bool oddCycleChecked = false;
        while (!candidates.empty()) {
            if (clock.expired()) return std::nullopt;
            EdgeOrbit orb;
            if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) <
                heuristics.randomPickFraction) {
                orb = candidates[rng() % candidates.size()];
            } else {
                std::vector<EdgeOrbit> best = bestOrbits(candidates, working, g);
                orb = best[rng() % best.size()];
            }
            // updateOrbits keeps every candidate addable, so this holds.
            if (!addOrbitIfGirthSafe(working, orb, g)) {
                std::erase(candidates, orb);
                continue;
            }
            placed.push_back(orb);
            candidates = updateOrbits(candidates, orb, working, g);

            if (!oddCycleChecked && oddCycleThreshold &&
                working.edgeCount() >= *oddCycleThreshold) {
                oddCycleChecked = true;
                if (!containsOddCycle(working)) {
                    abandoned = true;
                    break;
                }
            }
        }
        if (abandoned) continue;

        if (!oddCycleThreshold) oddCycleThreshold = working.edgeCount() / 2;

        const std::uint64_t screenSeed = rng();
        const bool found = randomColourable(k, working, colorEffort, screenSeed).has_value();
        if (logger) logger({iter, working.edgeCount(), found, screenSeed});
        if (!found)
            return LcfSearchResult{std::move(working), schemeFromOrbits(r, s, placed), iter};
    }
}

std::uint64_t exhaustiveSearch(int g, int r, int s, int k,
                               const std::function<bool(const LcfSearchResult&)>& emit,
                               std::uint64_t colorSeed, const LocalSearchEffort& colorEffort,
                               const SearchLogger& logger) {
    if (r * s > 24)
        throw std::invalid_argument("complete search is capped at 24 vertices");
    const std::vector<EdgeOrbit> orbits = getOrbits(r, s);
    Graph working(r * s);
    std::vector<EdgeOrbit> placed;
    std::vector<char> included(orbits.size(), 0);
    std::uint64_t screened = 0;
    bool stopped = false;

    // Include-first depth-first walk over orbit subsets; only subsets that
    // stay girth-safe are expanded, and only maximal ones are screened.
    auto walk = [&](auto&& self, std::size_t idx) -> void {
        if (stopped) return;
        if (idx == orbits.size()) {
            for (std::size_t i = 0; i < orbits.size(); ++i)
                if (!included[i] && orbitGirthSafe(working, orbits[i], g))
                    return;  // not maximal; the superset is visited elsewhere
            ++screened;
            const bool found =
                randomColourable(k, working, colorEffort, colorSeed).has_value();
            if (logger) logger({screened, working.edgeCount(), found, colorSeed});
            if (!found &&
                !emit(LcfSearchResult{working, schemeFromOrbits(r, s, placed), screened}))
                stopped = true;
            return;
        }
        if (addOrbitIfGirthSafe(working, orbits[idx], g)) {
            included[idx] = 1;
            placed.push_back(orbits[idx]);
            self(self, idx + 1);
            placed.pop_back();
            included[idx] = 0;
            for (const Edge& e : orbits[idx].edges) working.removeEdge(e.first, e.second);
        }
        self(self, idx + 1);
    };
    walk(walk, 0);
    return screened;
}

LcfScheme parseLcfTable(std::string_view text, int cycleLength) {
    if (cycleLength < 2) throw std::invalid_argument("cycle length must be at least 2");
    std::vector<std::vector<int>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::string_view sv = line;
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
            sv.remove_suffix(1);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
        if (sv.empty() || sv.front() == '#') continue;

        std::size_t colon = sv.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("malformed row label (missing ':'): " + std::string(sv));
        std::string label(sv.substr(0, colon));
        // strip trailing spaces in label
        while (!label.empty() && label.back() == ' ') label.pop_back();
        if (label.empty() ||
            !std::all_of(label.begin(), label.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("malformed row label: '" + label + "'");
        const int rowIndex = std::stoi(label);
        if (rowIndex != static_cast<int>(rows.size()))
            throw std::invalid_argument("row labels must run 0,1,2,...; got " + label);

        rows.emplace_back();
        std::istringstream tokens{std::string(sv.substr(colon + 1))};
        std::string tok;
        while (tokens >> tok) {
            std::size_t used = 0;
            long long value;
            try {
                value = std::stoll(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad offset '" + tok + "'");
            }
            if (used != tok.size()) throw std::invalid_argument("bad offset '" + tok + "'");
            rows.back().push_back(static_cast<int>(value));
        }
    }
    if (rows.empty()) throw std::invalid_argument("empty LCF table");

    LcfScheme scheme;
    scheme.rowCount = static_cast<int>(rows.size());
    scheme.cycleLength = cycleLength;
    const int n = scheme.order();
    scheme.rows.assign(scheme.rowCount, {});
    for (int row = 0; row < scheme.rowCount; ++row)
        for (long long t : rows[row]) {
            if (std::abs(t) >= n)
                throw std::invalid_argument("offset " + std::to_string(t) +
                                            " out of range for order " + std::to_string(n));
            scheme.rows[row].push_back(normalizeOffset(t, n));  // rejects 0 mod n
        }
    return scheme;
}

std::string emitLcfTable(const LcfScheme& scheme) {
    std::ostringstream out;
    for (int row = 0; row < scheme.rowCount; ++row) {
        out << row << ':';
        for (int t : scheme.rows[row]) out << ' ' << t;
        out << '\n';
    }
    return out.str();
}

}  // namespace ngk
