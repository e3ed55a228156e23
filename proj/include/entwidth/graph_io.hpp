#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "entwidth/graph.hpp"

namespace entwidth {

// Plain-text edge-list format:
//   # comment
//   modes N
//   i j strength
// one edge per line, '#' starts a comment, blank lines allowed, LF or CRLF.
inline WeightedGraph read_graph(std::istream& in) {
  auto fail = [](int line, const std::string& what) -> std::runtime_error {
    return std::runtime_error("graph file line " + std::to_string(line) + ": " + what);
  };

  int line_no = 0;
  bool have_header = false;
  int n_modes = 0;
  WeightedGraph graph(1);

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);

    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank or comment-only

    if (!have_header) {
      if (first != "modes") throw fail(line_no, "expected header \"modes N\"");
      if (!(fields >> n_modes) || n_modes < 1)
        throw fail(line_no, "bad mode count");
      std::string extra;
      if (fields >> extra) throw fail(line_no, "trailing tokens after header");
      graph = WeightedGraph(n_modes);
      have_header = true;
      continue;
    }

    int a = 0, b = 0;
    double strength = 0.0;
    std::istringstream edge_fields(line);
    std::string extra;
    if (!(edge_fields >> a >> b >> strength))
      throw fail(line_no, "expected \"i j strength\"");
    if (edge_fields >> extra) throw fail(line_no, "trailing tokens after edge");
    try {
      graph.add_edge(a, b, strength);
    } catch (const std::invalid_argument& e) {
      throw fail(line_no, e.what());
    }
  }

  if (!have_header) throw std::runtime_error("graph file: missing \"modes N\" header");
  return graph;
}

inline WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const WeightedGraph& graph) {
  out << "modes " << graph.n_vertices() << "\n";
  char buf[64];
  for (const WeightedEdge& e : graph.edges()) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.strength);
    out << e.a << " " << e.b << " " << buf << "\n";
  }
}

}  // namespace entwidth
