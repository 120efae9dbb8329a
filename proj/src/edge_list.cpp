#include "indset/edge_list.hpp"

#include <fstream>
#include <sstream>

namespace indset {

namespace {

// Next non-blank line with comments stripped, or false at EOF.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line))
    throw precondition_error("edge list: missing header line");
  std::istringstream header(line);
  int64_t n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw precondition_error("edge list: header must be 'n m'");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (int64_t i = 0; i < m; ++i) {
    if (!next_content_line(in, line))
      throw precondition_error("edge list: fewer edges than header declares");
    std::istringstream row(line);
    int64_t u = -1, v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0)
      throw precondition_error("edge list: edge line must be 'u v'");
    edges.emplace_back(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
  }
  return Graph::from_edges(static_cast<uint32_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open graph file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw precondition_error("cannot open output file: " + path);
  write_edge_list(out, g);
}

}  // namespace indset
