#pragma once

#include <string>
#include <string_view>

#include "dezaforge/graph.hpp"

namespace dezaforge {

/// graph6 encoding without trailing newline. Uses the one-byte size prefix
/// for v <= 62 and the 4-byte form (126 + 3 bytes) up to 258047 vertices.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
/// Throws ParseError with the offending byte offset.
Graph from_graph6(std::string_view text);

/// "# vertices N" header then one "u w" line per edge (u < w, zero-based,
/// lexicographic order).
std::string to_edge_list(const Graph& g);
/// Blank lines and '#' comments are skipped; without a "# vertices N"
/// header the vertex count is one more than the largest endpoint.
Graph from_edge_list(std::string_view text);

}  // namespace dezaforge
