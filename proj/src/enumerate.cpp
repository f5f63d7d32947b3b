#include "ngk/enumerate.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "ngk/canonical.hpp"
#include "ngk/coloring.hpp"

namespace ngk {

namespace {

constexpr int kUnreachable = 99;

// All-pairs BFS distances on the bitmask representation.
std::array<std::array<std::int8_t, 16>, 16> allDistances(const SmallGraph& g) {
    std::array<std::array<std::int8_t, 16>, 16> dist{};
    for (int s = 0; s < g.n; ++s) {
        for (int v = 0; v < g.n; ++v) dist[s][v] = kUnreachable;
        dist[s][s] = 0;
        std::uint16_t frontier = static_cast<std::uint16_t>(1u << s);
        std::uint16_t seen = frontier;
        int d = 0;
        while (frontier) {
            ++d;
            std::uint16_t next = 0;
            std::uint16_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.adj[v];
            }
            next &= static_cast<std::uint16_t>(~seen);
            std::uint16_t nf = next;
            while (nf) {
                int v = std::countr_zero(nf);
                nf &= nf - 1;
                dist[s][v] = static_cast<std::int8_t>(d);
            }
            seen |= next;
            frontier = next;
        }
    }
    return dist;
}

struct Generator {
    GenerationConstraints c;
    const std::function<bool(const Graph&)>& visit;
    std::uint64_t visited = 0;
    bool stopped = false;

    void run() {
        SmallGraph root;
        root.n = 1;
        extend(root);
    }

    void extend(const SmallGraph& p) {
        if (stopped) return;
        if (p.n == c.maxOrder) {
            for (int v = 0; v < p.n; ++v)
                if (p.degree(v) < c.minDegree) return;
            ++visited;
            if (!visit(toGraph(p))) stopped = true;
            return;
        }

        const auto dist = allDistances(p);
        const int m = p.n;
        const int futureSlots = c.maxOrder - m - 1;
        std::set<CanonCode> childrenSeen;

        for (std::uint32_t nb = 0; nb < (1u << m) && !stopped; ++nb) {
            const int newDeg = std::popcount(nb);
            if (newDeg > c.maxDegree) continue;
            if (newDeg + futureSlots < c.minDegree) continue;

            bool ok = true;
            for (int v = 0; v < m && ok; ++v) {
                const int inNb = (nb >> v) & 1;
                if (inNb && p.degree(v) + 1 > c.maxDegree) ok = false;
                if (p.degree(v) + inNb + futureSlots < c.minDegree) ok = false;
            }
            if (!ok) continue;

            // Every cycle created by the new vertex runs through two of its
            // neighbours, with length dist(a, b) + 2.
            if (c.girthMin > 3) {
                std::uint32_t rest = nb;
                while (rest && ok) {
                    int a = std::countr_zero(rest);
                    rest &= rest - 1;
                    std::uint32_t others = rest;
                    while (others) {
                        int b = std::countr_zero(others);
                        others &= others - 1;
                        if (dist[a][b] + 2 < c.girthMin) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) continue;
            }

            SmallGraph child = p;
            child.n = m + 1;
            std::uint32_t rest = nb;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                child.addEdge(m, v);
            }

            const CanonResult canon = canonicalize(child);
            if (!childrenSeen.insert(canon.code).second) continue;

            // Accept the child only when the added vertex can land in the
            // last canonical position; otherwise this class is produced from
            // its true parent elsewhere in the tree.
            int rho = -1;
            for (int v = 0; v <= m; ++v)
                if (canon.position[v] == m) {
                    rho = v;
                    break;
                }
            if (rho != m && markedCanonCode(child, m) != markedCanonCode(child, rho)) continue;

            extend(child);
        }
    }
};

GenerationConstraints validated(GenerationConstraints c, int safetyCap) {
    if (safetyCap > 16) throw std::invalid_argument("safety cap above the 16-vertex limit");
    if (c.maxOrder < 1) throw std::invalid_argument("maxOrder must be at least 1");
    if (c.maxOrder > safetyCap)
        throw std::invalid_argument("order " + std::to_string(c.maxOrder) +
                                    " exceeds the safety cap " + std::to_string(safetyCap));
    if (c.girthMin < 3) throw std::invalid_argument("girthMin must be at least 3");
    if (c.minDegree < 0 || c.minDegree > c.maxDegree)
        throw std::invalid_argument("need 0 <= minDegree <= maxDegree");
    if (c.minDegree >= c.maxOrder)
        throw std::invalid_argument("minDegree must be below maxOrder");
    c.maxDegree = std::min(c.maxDegree, c.maxOrder - 1);
    return c;
}

}  // namespace

std::uint64_t generate(const GenerationConstraints& constraints,
                       const std::function<bool(const Graph&)>& visitor, int safetyCap) {
    Generator gen{validated(constraints, safetyCap), visitor};
    gen.run();
    return gen.visited;
}

CertifyResult certifyAllColorable(const GenerationConstraints& constraints, int k,
                                  int safetyCap) {
    CertifyResult out;
    out.visited = generate(
        constraints,
        [&](const Graph& g) {
            ColorDecision d = decideKColorable(g, k);
            if (d.status == ColorStatus::NotColorable) {
                out.allColorable = false;
                out.counterexample = g;
                return false;
            }
            return true;
        },
        safetyCap);
    return out;
}

}  // namespace ngk
