#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "alphawidth/graph.hpp"

namespace alphawidth {

enum class GraphFormat { Graph6, Dimacs, EdgeList };

GraphFormat parse_graph_format(std::string_view name);

/// graph6: header byte n+63 (or 126 followed by three 6-bit groups when
/// n >= 63), then the upper triangle in column order (0,1),(0,2),(1,2),...
/// packed big-endian into 6-bit chunks offset by 63, zero padded.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// DIMACS edge format: optional "c" comment lines, one "p edge n m" line,
/// then 1-indexed "e u v" lines.
Graph parse_dimacs(std::string_view text);
std::string to_dimacs(const Graph& g);

/// Whitespace edge list, 0-indexed, one "u v" pair per line. An optional first
/// line holding a single integer fixes the vertex count; otherwise it is one
/// more than the largest id. Lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string format_graph(const Graph& g, GraphFormat format);

/// Reads a file holding one graph (DIMACS, edge list) or one graph6 string
/// per non-empty line.
std::vector<Graph> read_graph_file(const std::string& path, GraphFormat format);

}  // namespace alphawidth
