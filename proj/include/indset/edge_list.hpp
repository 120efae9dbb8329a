#pragma once

#include <iosfwd>
#include <string>

#include "indset/graph.hpp"

namespace indset {

// Text format: first line "n m", then m lines "u v" (0-based,
// whitespace-separated). Blank lines and lines starting with '#' ignored;
// '#' also starts a trailing comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace indset
