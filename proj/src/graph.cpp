#include "ngk/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace ngk {

Graph::Graph(int order) : order_(order), adj_(order, Bitset(order)), degree_(order, 0) {
    if (order < 0) throw std::invalid_argument("graph order must be non-negative");
}

Graph Graph::fromEdges(int order, std::span<const Edge> edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.addEdge(u, v);
    return g;
}

bool Graph::addEdge(int u, int v) {
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (adj_[u].test(v)) return false;
    adj_[u].set(v);
    adj_[v].set(u);
    ++degree_[u];
    ++degree_[v];
    ++edgeCount_;
    return true;
}

bool Graph::removeEdge(int u, int v) {
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw std::out_of_range("edge endpoint out of range");
    if (u == v || !adj_[u].test(v)) return false;
    adj_[u].reset(v);
    adj_[v].reset(u);
    --degree_[u];
    --degree_[v];
    --edgeCount_;
    return true;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edgeCount_);
    for (int u = 0; u < order_; ++u)
        adj_[u].forEach([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

namespace {

// BFS from `root` looking for the shortest cycle visible from it. Candidates
// dist[x] + dist[y] + 1 over scanned non-tree edges are always at least the
// girth, and roots on a shortest cycle realize it exactly, so the minimum
// over all roots is the girth.
int shortestCycleFrom(const Graph& g, int root, int best,
                      std::vector<int>& dist, std::vector<int>& parent,
                      std::vector<int>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    parent[root] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        // A neighbor of x can sit at depth dist[x]-1, so candidates from here
        // on are >= 2*dist[x]; stop once that cannot improve best.
        if (best <= 2 * dist[x]) break;
        g.neighbors(x).forEach([&](int y) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            } else if (y != parent[x]) {
                best = std::min(best, dist[x] + dist[y] + 1);
            }
        });
    }
    return best;
}

constexpr int kNoCycle = 1 << 29;

}  // namespace

GirthValue girth(const Graph& g) {
    const int n = g.order();
    int best = kNoCycle;
    std::vector<int> dist(n), parent(n), queue;
    queue.reserve(n);
    for (int v = 0; v < n && best > 3; ++v)
        best = shortestCycleFrom(g, v, best, dist, parent, queue);
    if (best == kNoCycle) return std::nullopt;
    return best;
}

bool containsCycleShorterThan(const Graph& g, int bound) {
    const int n = g.order();
    std::vector<int> dist(n), parent(n), queue;
    queue.reserve(n);
    int best = bound;  // only improvements below `bound` matter
    for (int v = 0; v < n; ++v) {
        best = shortestCycleFrom(g, v, best, dist, parent, queue);
        if (best < bound) return true;
    }
    return false;
}

bool distanceAtMost(const Graph& g, int from, int to, int maxDist) {
    if (from == to) return maxDist >= 0;
    if (maxDist <= 0) return false;
    const int n = g.order();
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    dist[from] = 0;
    queue.push_back(from);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        if (dist[x] >= maxDist) break;
        bool hit = false;
        g.neighbors(x).forEach([&](int y) {
            if (y == to) hit = true;
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        });
        if (hit) return true;
    }
    return false;
}

bool containsOddCycle(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    for (int start = 0; start < n; ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        queue.clear();
        queue.push_back(start);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            bool odd = false;
            g.neighbors(x).forEach([&](int y) {
                if (side[y] < 0) {
                    side[y] = side[x] ^ 1;
                    queue.push_back(y);
                } else if (side[y] == side[x]) {
                    odd = true;
                }
            });
            if (odd) return true;
        }
    }
    return false;
}

DegreeSummary degreeSummary(const Graph& g) {
    DegreeSummary s;
    if (g.order() == 0) return s;
    s.minDegree = s.maxDegree = g.degree(0);
    for (int v = 1; v < g.order(); ++v) {
        s.minDegree = std::min(s.minDegree, g.degree(v));
        s.maxDegree = std::max(s.maxDegree, g.degree(v));
    }
    s.isRegular = s.minDegree == s.maxDegree;
    return s;
}

namespace {

// Shared state for simple-cycle enumeration. Cycles are counted once each by
// anchoring: either at their minimum-labelled vertex with a fixed rotational
// direction, or (restricted form) at their lowest-indexed edge of `among`.
struct CycleCounter {
    const Graph& g;
    int length;
    std::vector<char> onPath;
    std::vector<int> path;
    std::vector<int> distToStart;  // pruning: BFS distances to the anchor
    std::int64_t count = 0;

    explicit CycleCounter(const Graph& g, int length)
        : g(g), length(length), onPath(g.order(), 0), distToStart(g.order()) {}

    void bfsFrom(int s, int cap) {
        std::fill(distToStart.begin(), distToStart.end(), cap + 1);
        std::vector<int> queue{s};
        distToStart[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            if (distToStart[x] >= cap) continue;
            g.neighbors(x).forEach([&](int y) {
                if (distToStart[y] > distToStart[x] + 1) {
                    distToStart[y] = distToStart[x] + 1;
                    queue.push_back(y);
                }
            });
        }
    }
};

// Unrestricted: paths start at the cycle's minimum vertex, intermediate
// vertices all larger, and the reflection is broken by path[1] < path.back().
void extendMinAnchored(CycleCounter& c, int v, int depth) {
    const int s = c.path[0];
    if (depth == c.length - 1) {
        if (c.g.hasEdge(v, s) && c.path[1] < v) ++c.count;
        return;
    }
    c.g.neighbors(v).forEach([&](int w) {
        if (w <= s || c.onPath[w]) return;
        if (c.distToStart[w] > c.length - depth - 1) return;
        c.onPath[w] = 1;
        c.path.push_back(w);
        extendMinAnchored(c, w, depth + 1);
        c.path.pop_back();
        c.onPath[w] = 0;
    });
}

}  // namespace

std::int64_t countCyclesOfLength(const Graph& g, int length) {
    if (length < 3 || g.order() < length) return 0;
    CycleCounter c(g, length);
    for (int s = 0; s < g.order(); ++s) {
        c.bfsFrom(s, length - 1);
        c.onPath[s] = 1;
        c.path.assign(1, s);
        // First step handled here so path[1] exists for the reflection test.
        g.neighbors(s).forEach([&](int w) {
            if (w <= s) return;
            c.onPath[w] = 1;
            c.path.push_back(w);
            extendMinAnchored(c, w, 1);
            c.path.pop_back();
            c.onPath[w] = 0;
        });
        c.onPath[s] = 0;
    }
    return c.count;
}

namespace {

struct EdgeRank {
    std::unordered_map<std::uint64_t, int> rank;
    static std::uint64_t key(int u, int v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }
    int lookup(int u, int v) const {
        auto it = rank.find(key(u, v));
        return it == rank.end() ? -1 : it->second;
    }
};

// Restricted: each qualifying cycle is counted at its lowest-ranked edge of
// `among`. The cycle minus that edge is a simple path between its endpoints,
// and any lower-ranked marked edge on the path would mean the cycle belongs
// to that anchor instead, so such branches are cut.
void extendEdgeAnchored(CycleCounter& c, const EdgeRank& marks, int anchorRank,
                        int v, int target, int depth) {
    if (depth == c.length - 1) {
        if (c.g.hasEdge(v, target)) {
            int r = marks.lookup(v, target);
            if (r < 0 || r > anchorRank) ++c.count;
        }
        return;
    }
    c.g.neighbors(v).forEach([&](int w) {
        if (c.onPath[w]) return;
        if (c.distToStart[w] > c.length - depth - 1) return;
        int r = marks.lookup(v, w);
        if (r >= 0 && r < anchorRank) return;
        c.onPath[w] = 1;
        extendEdgeAnchored(c, marks, anchorRank, w, target, depth + 1);
        c.onPath[w] = 0;
    });
}

}  // namespace

std::int64_t countCyclesOfLength(const Graph& g, int length, std::span<const Edge> among) {
    if (length < 3 || g.order() < length) return 0;
    EdgeRank marks;
    std::vector<Edge> present;
    for (auto [u, v] : among) {
        if (!g.hasEdge(u, v)) continue;
        if (marks.rank.emplace(EdgeRank::key(u, v), static_cast<int>(present.size())).second)
            present.emplace_back(std::min(u, v), std::max(u, v));
    }
    CycleCounter c(g, length);
    for (std::size_t i = 0; i < present.size(); ++i) {
        auto [a, b] = present[i];
        // Count paths b -> ... -> a of length-1 edges; closing edge is (a, b).
        c.bfsFrom(a, length - 1);
        c.onPath[a] = 1;
        c.onPath[b] = 1;
        c.path.clear();
        extendEdgeAnchored(c, marks, static_cast<int>(i), b, a, 1);
        c.onPath[a] = 0;
        c.onPath[b] = 0;
    }
    return c.count;
}

Graph removeVertices(const Graph& g, std::span<const int> drop) {
    std::vector<char> gone(g.order(), 0);
    for (int v : drop) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
        gone[v] = 1;
    }
    std::vector<int> newIndex(g.order(), -1);
    int m = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!gone[v]) newIndex[v] = m++;
    Graph out(m);
    for (auto [u, v] : g.edges())
        if (!gone[u] && !gone[v]) out.addEdge(newIndex[u], newIndex[v]);
    return out;
}

std::uint64_t edgeSetHash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(g.order()));
    for (auto [u, v] : g.edges())
        mix((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v));
    return h;
}

}  // namespace ngk
