#pragma once

#include <iosfwd>
#include <string>

#include "maxcon/graph.hpp"

namespace maxcon {

// Edge-list text format: header "n m", then m lines "u v" with 1 <= u < v <= n.
// Writing is canonical: edges sorted ascending.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// graph6 interchange format (one graph per line, no header).
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& line);

// Reads a file; ".g6" selects graph6 (first line), anything else edge list.
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace maxcon
