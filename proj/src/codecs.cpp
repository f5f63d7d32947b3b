#include "ngk/codecs.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace ngk {

namespace {

void appendSixBitGroups(std::string& out, unsigned long long value, int groups) {
    for (int i = groups - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + 63));
}

}  // namespace

std::string encodeGraph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        appendSixBitGroups(out, static_cast<unsigned long long>(n), 3);
    } else {
        out.push_back('~');
        out.push_back('~');
        appendSixBitGroups(out, static_cast<unsigned long long>(n), 6);
    }
    int bits = 0;
    int current = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            current = (current << 1) | (g.hasEdge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(current + 63));
                bits = 0;
                current = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((current << (6 - bits)) + 63));
    return out;
}

Graph decodeGraph6(std::string_view line) {
    // Tolerate a trailing newline; everything else is checked strictly.
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    std::size_t pos = 0;
    auto need = [&](std::size_t count) {
        if (line.size() - pos < count)
            throw CodecError("graph6 input truncated", line.size());
    };
    auto sixBits = [&]() -> int {
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126)
            throw CodecError("byte outside graph6 range 63..126", pos);
        ++pos;
        return c - 63;
    };

    if (line.empty()) throw CodecError("empty graph6 input", 0);
    long long n = 0;
    if (line[pos] != '~') {
        n = sixBits();
    } else {
        ++pos;
        need(1);
        if (line[pos] != '~') {
            need(3);
            for (int i = 0; i < 3; ++i) n = (n << 6) | sixBits();
        } else {
            ++pos;
            need(6);
            for (int i = 0; i < 6; ++i) n = (n << 6) | sixBits();
        }
    }
    if (n > 100000000) throw CodecError("graph6 order implausibly large", 0);

    Graph g(static_cast<int>(n));
    const long long pairCount = n * (n - 1) / 2;
    const std::size_t expectedBytes = static_cast<std::size_t>((pairCount + 5) / 6);
    if (line.size() - pos < expectedBytes)
        throw CodecError("graph6 input truncated", line.size());
    if (line.size() - pos > expectedBytes)
        throw CodecError("trailing bytes after graph6 data", pos + expectedBytes);

    int row = 0, col = 1;
    for (long long seen = 0; seen < pairCount;) {
        int group = sixBits();
        for (int b = 5; b >= 0 && seen < pairCount; --b, ++seen) {
            if ((group >> b) & 1) g.addEdge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
        // Padding bits of the final group must be zero.
        if (seen == pairCount) {
            int padBits = static_cast<int>(6 * expectedBytes - pairCount);
            if (padBits > 0 && (group & ((1 << padBits) - 1)) != 0)
                throw CodecError("nonzero padding bits", pos - 1);
        }
    }
    return g;
}

namespace {

struct Row {
    int label;
    std::vector<int> neighbors;
};

bool parseInt(std::string_view tok, int& out) {
    if (tok.empty()) return false;
    long long v = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        v = v * 10 + (c - '0');
        if (v > 1000000000) return false;
    }
    out = static_cast<int>(v);
    return true;
}

}  // namespace

Graph parseAdjacencyList(std::string_view text, std::optional<int> declaredOrder) {
    std::vector<Row> rows;
    std::size_t lineStart = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        if (offset == text.size() || text[offset] == '\n') {
            std::string_view line = text.substr(lineStart, offset - lineStart);
            std::size_t base = lineStart;
            lineStart = offset + 1;

            std::string_view trimmed = line;
            while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ' ||
                                        trimmed.back() == '\t'))
                trimmed.remove_suffix(1);
            bool indented = !trimmed.empty() &&
                            (trimmed.front() == ' ' || trimmed.front() == '\t');
            while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t'))
                trimmed.remove_prefix(1);
            if (trimmed.empty() || trimmed.front() == '#') {
                ++offset;
                continue;
            }

            // Tokenize; a "label:" head starts a new row unless indented.
            std::vector<std::string_view> toks;
            std::size_t i = 0;
            while (i < trimmed.size()) {
                while (i < trimmed.size() && (trimmed[i] == ' ' || trimmed[i] == '\t')) ++i;
                std::size_t j = i;
                while (j < trimmed.size() && trimmed[j] != ' ' && trimmed[j] != '\t') ++j;
                if (j > i) toks.push_back(trimmed.substr(i, j - i));
                i = j;
            }

            std::size_t firstNeighbor = 0;
            bool continuation = indented;
            int label = -1;
            if (!continuation) {
                std::string_view head = toks[0];
                bool headHasColon = !head.empty() && head.back() == ':';
                if (headHasColon) head.remove_suffix(1);
                // also accept "v : n1 n2"
                bool separateColon = !headHasColon && toks.size() > 1 && toks[1] == ":";
                if (headHasColon || separateColon) {
                    if (!parseInt(head, label))
                        throw CodecError("unknown vertex label '" + std::string(head) + "'",
                                         base);
                    firstNeighbor = separateColon ? 2 : 1;
                } else {
                    continuation = true;
                }
            }
            if (continuation) {
                if (rows.empty())
                    throw CodecError("continuation line before any vertex row", base);
            } else {
                rows.push_back({label, {}});
            }
            for (std::size_t t = firstNeighbor; t < toks.size(); ++t) {
                int v;
                if (!parseInt(toks[t], v))
                    throw CodecError("unknown vertex label '" + std::string(toks[t]) + "'",
                                     base);
                rows.back().neighbors.push_back(v);
            }
            ++offset;
        } else {
            ++offset;
        }
    }

    int order = declaredOrder.value_or(0);
    if (!declaredOrder) {
        for (const Row& r : rows) {
            order = std::max(order, r.label + 1);
            for (int v : r.neighbors) order = std::max(order, v + 1);
        }
    }
    Graph g(order);
    for (const Row& r : rows) {
        if (r.label >= order)
            throw CodecError("vertex label " + std::to_string(r.label) +
                                 " is at or above the declared order " + std::to_string(order),
                             0);
        for (int v : r.neighbors) {
            if (v >= order)
                throw CodecError("neighbor index " + std::to_string(v) +
                                     " is at or above the declared order " + std::to_string(order),
                                 0);
            if (v == r.label)
                throw CodecError("self-loop on vertex " + std::to_string(v), 0);
            g.addEdge(r.label, v);
        }
    }
    return g;
}

std::string emitAdjacencyList(const Graph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.order(); ++v) {
        out << v << ':';
        g.neighbors(v).forEach([&](int w) { out << ' ' << w; });
        out << '\n';
    }
    return out.str();
}

}  // namespace ngk
