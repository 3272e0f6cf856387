#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "factorlab/funcs.hpp"
#include "factorlab/graph.hpp"

namespace factorlab {

struct ParsedGraph {
    Graph graph;
    std::optional<VertexFuncs> funcs;
};

/// Line-oriented text format, 1-indexed vertex ids:
///
///   c optional comment
///   p fgf <n> <edge-count>
///   v <id> <g> <f>        (optional; must cover every vertex if present)
///   e <u> <v>
///
/// Edges may appear in any order; serialization writes them with u < v in
/// ascending order. Throws ParseError with the offending line number.
ParsedGraph parse_graph_file(std::string_view text);

std::string serialize_graph(const Graph& g, const VertexFuncs* funcs = nullptr);

} // namespace factorlab
