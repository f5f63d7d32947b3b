#include "ngk/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ngk {

namespace {

using Cells = std::vector<std::vector<int>>;

struct Canonicalizer {
    const SmallGraph& g;
    int n;
    bool haveBest = false;
    CanonCode best{};
    std::array<std::int8_t, 16> bestPos{};
    std::vector<std::array<std::int8_t, 16>> gens;  // discovered automorphisms
    std::vector<int> base;                          // individualized vertices on the stack

    explicit Canonicalizer(const SmallGraph& g) : g(g), n(g.n) {}

    // Equitable refinement: split every cell by neighbor counts into each
    // cell, sub-cells ordered by count profile, until stable. Cell order is
    // part of the result, so the ordered partition is canonical given the
    // input cell order.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed && static_cast<int>(cells.size()) < n) {
            changed = false;
            std::vector<std::uint16_t> mask(cells.size(), 0);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) mask[c] |= static_cast<std::uint16_t>(1u << v);
            Cells next;
            next.reserve(cells.size());
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() == 1) {
                    next.push_back(cells[c]);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cells[c].size());
                for (int v : cells[c]) {
                    std::vector<int> sig;
                    sig.reserve(cells.size());
                    for (std::size_t d = 0; d < cells.size(); ++d)
                        sig.push_back(std::popcount(
                            static_cast<std::uint16_t>(g.adj[v] & mask[d])));
                    keyed.emplace_back(std::move(sig), v);
                }
                std::sort(keyed.begin(), keyed.end());
                std::size_t runStart = 0;
                for (std::size_t i = 1; i <= keyed.size(); ++i) {
                    if (i == keyed.size() || keyed[i].first != keyed[runStart].first) {
                        std::vector<int> cell;
                        for (std::size_t j = runStart; j < i; ++j)
                            cell.push_back(keyed[j].second);
                        if (cell.size() != cells[c].size()) changed = true;
                        next.push_back(std::move(cell));
                        runStart = i;
                    }
                }
            }
            cells = std::move(next);
        }
    }

    CanonCode encode(const std::array<std::int8_t, 16>& pos) const {
        CanonCode code{0, 0};
        for (int u = 0; u < n; ++u) {
            std::uint16_t row = g.adj[u];
            while (row) {
                int v = std::countr_zero(row);
                row &= row - 1;
                if (v <= u) continue;
                int p = pos[u], q = pos[v];
                if (p > q) std::swap(p, q);
                const int idx = q * (q - 1) / 2 + p;
                if (idx < 64)
                    code.first |= std::uint64_t{1} << idx;
                else
                    code.second |= std::uint64_t{1} << (idx - 64);
            }
        }
        return code;
    }

    void leaf(const Cells& cells) {
        std::array<std::int8_t, 16> pos{};
        for (std::size_t i = 0; i < cells.size(); ++i)
            pos[cells[i][0]] = static_cast<std::int8_t>(i);
        const CanonCode code = encode(pos);
        if (!haveBest || code < best) {
            haveBest = true;
            best = code;
            bestPos = pos;
            return;
        }
        if (code == best && gens.size() < 64) {
            // Both labelings produce the same matrix, so best^-1 . current
            // is an automorphism; it survives later best updates.
            std::array<std::int8_t, 16> inv{};
            for (int v = 0; v < n; ++v) inv[pos[v]] = static_cast<std::int8_t>(v);
            std::array<std::int8_t, 16> gamma{};
            for (int u = 0; u < n; ++u) gamma[u] = inv[bestPos[u]];
            gens.push_back(gamma);
        }
    }

    // v may be skipped if an automorphism fixing every base point maps it to
    // a sibling already tried: the subtrees are then images of one another.
    bool equivalentToTried(int v, const std::vector<int>& tried) const {
        if (tried.empty() || gens.empty()) return false;
        std::array<int, 16> parent{};
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& gamma : gens) {
            bool fixesBase = true;
            for (int b : base)
                if (gamma[b] != b) {
                    fixesBase = false;
                    break;
                }
            if (!fixesBase) continue;
            any = true;
            for (int x = 0; x < n; ++x) {
                int a = find(x), b = find(gamma[x]);
                if (a != b) parent[a] = b;
            }
        }
        if (!any) return false;
        for (int u : tried)
            if (find(u) == find(v)) return true;
        return false;
    }

    void search(Cells& cells) {
        if (static_cast<int>(cells.size()) == n) {
            leaf(cells);
            return;
        }
        std::size_t target = 0;
        while (cells[target].size() == 1) ++target;
        const std::vector<int> members = cells[target];
        std::vector<int> tried;
        for (int v : members) {
            if (equivalentToTried(v, tried)) continue;
            tried.push_back(v);
            Cells child = cells;
            child[target] = {v};
            std::vector<int> rest;
            for (int w : members)
                if (w != v) rest.push_back(w);
            child.insert(child.begin() + target + 1, std::move(rest));
            refine(child);
            base.push_back(v);
            search(child);
            base.pop_back();
        }
    }
};

}  // namespace

CanonResult canonicalize(const SmallGraph& g, const std::array<std::int8_t, 16>* colors) {
    CanonResult out;
    if (g.n == 0) return out;
    Canonicalizer canon(g);
    Cells cells;
    if (colors) {
        std::vector<std::pair<std::int8_t, int>> byColor;
        for (int v = 0; v < g.n; ++v) byColor.emplace_back((*colors)[v], v);
        std::sort(byColor.begin(), byColor.end());
        for (std::size_t i = 0; i < byColor.size(); ++i) {
            if (i == 0 || byColor[i].first != byColor[i - 1].first) cells.emplace_back();
            cells.back().push_back(byColor[i].second);
        }
    } else {
        cells.emplace_back();
        for (int v = 0; v < g.n; ++v) cells.back().push_back(v);
    }
    canon.refine(cells);
    canon.search(cells);
    out.code = canon.best;
    out.position = canon.bestPos;
    return out;
}

CanonCode markedCanonCode(const SmallGraph& g, int marked) {
    std::array<std::int8_t, 16> colors{};
    colors.fill(1);
    colors[marked] = 0;
    return canonicalize(g, &colors).code;
}

SmallGraph toSmallGraph(const Graph& g) {
    if (g.order() > 16)
        throw std::invalid_argument("small-graph machinery handles at most 16 vertices");
    SmallGraph s;
    s.n = g.order();
    for (auto [u, v] : g.edges()) s.addEdge(u, v);
    return s;
}

Graph toGraph(const SmallGraph& s) {
    Graph g(s.n);
    for (int u = 0; u < s.n; ++u) {
        std::uint16_t row = s.adj[u];
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            if (u < v) g.addEdge(u, v);
        }
    }
    return g;
}

}  // namespace ngk
