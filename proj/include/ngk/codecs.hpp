#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ngk/graph.hpp"

namespace ngk {

// Parse failure; `byteOffset` points at the offending byte of the input.
class CodecError : public std::runtime_error {
public:
    CodecError(const std::string& what, std::size_t byteOffset)
        : std::runtime_error(what + " (at byte " + std::to_string(byteOffset) + ")"),
          byteOffset(byteOffset) {}
    std::size_t byteOffset;
};

// graph6: 6-bit big-endian packing of the upper adjacency triangle in
// column-major order, bytes offset by 63. Short order form below 63
// vertices, '~'-prefixed extended forms above.
std::string encodeGraph6(const Graph& g);
Graph decodeGraph6(std::string_view line);

// Adjacency-list text: one "v: n1 n2 ..." row per vertex. The parser
// symmetrizes (an edge may be listed from either endpoint) and treats a line
// that starts with whitespace or lacks a "label:" prefix as a continuation
// of the previous row, which is how wide rows wrap in published tables.
// When `declaredOrder` is given, any index at or above it is an error;
// otherwise the order is one past the largest index seen.
Graph parseAdjacencyList(std::string_view text, std::optional<int> declaredOrder = std::nullopt);
std::string emitAdjacencyList(const Graph& g);

}  // namespace ngk
