#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace entwidth {

struct WeightedEdge {
  int a;
  int b;
  double strength;
};

// Undirected graph with a positive bond strength per edge; a cluster-state
// blueprint. Zero-strength edges are rejected rather than treated as absent.
class WeightedGraph {
 public:
  explicit WeightedGraph(int n_vertices) : n_vertices_(n_vertices) {
    if (n_vertices_ < 1)
      throw std::invalid_argument("WeightedGraph: need at least one vertex");
  }

  void add_edge(int a, int b, double strength) {
    if (a == b) throw std::invalid_argument("WeightedGraph: self-loop rejected");
    if (a < 0 || b < 0 || a >= n_vertices_ || b >= n_vertices_)
      throw std::invalid_argument("WeightedGraph: vertex index out of range");
    if (!(strength > 0.0))
      throw std::invalid_argument("WeightedGraph: edge strength must be positive");
    if (a > b) std::swap(a, b);
    for (const WeightedEdge& e : edges_)
      if (e.a == a && e.b == b)
        throw std::invalid_argument("WeightedGraph: duplicate edge");
    edges_.push_back({a, b, strength});
  }

  int n_vertices() const { return n_vertices_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }

  bool unit_strengths() const {
    for (const WeightedEdge& e : edges_)
      if (e.strength != 1.0) return false;
    return true;
  }

  // Symmetric N x N matrix of bond strengths.
  Eigen::MatrixXd adjacency_matrix() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_vertices_, n_vertices_);
    for (const WeightedEdge& e : edges_) {
      a(e.a, e.b) = e.strength;
      a(e.b, e.a) = e.strength;
    }
    return a;
  }

 private:
  int n_vertices_;
  std::vector<WeightedEdge> edges_;
};

inline WeightedGraph path_graph(int n, double strength = 1.0) {
  if (n < 2) throw std::invalid_argument("path_graph: need n >= 2");
  WeightedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, strength);
  return g;
}

inline WeightedGraph star_graph(int n, double strength = 1.0) {
  if (n < 2) throw std::invalid_argument("star_graph: need n >= 2");
  WeightedGraph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i, strength);
  return g;
}

inline WeightedGraph complete_graph(int n, double strength = 1.0) {
  if (n < 2) throw std::invalid_argument("complete_graph: need n >= 2");
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, strength);
  return g;
}

// l-by-l grid, vertices numbered row-major from the top left.
inline WeightedGraph grid_graph(int l, double strength = 1.0) {
  if (l < 2) throw std::invalid_argument("grid_graph: need l >= 2");
  WeightedGraph g(l * l);
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < l; ++c) {
      if (c + 1 < l) g.add_edge(r * l + c, r * l + c + 1, strength);
      if (r + 1 < l) g.add_edge(r * l + c, (r + 1) * l + c, strength);
    }
  return g;
}

// Simple graph with binary adjacency, stored as packed bit rows.
class QubitGraph {
 public:
  explicit QubitGraph(int n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {
    if (n_ < 1) throw std::invalid_argument("QubitGraph: need at least one vertex");
  }

  static QubitGraph from_graph(const WeightedGraph& g) {
    QubitGraph q(g.n_vertices());
    for (const WeightedEdge& e : g.edges()) q.add_edge(e.a, e.b);
    return q;
  }

  void add_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("QubitGraph: self-loop rejected");
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
      throw std::invalid_argument("QubitGraph: vertex index out of range");
    set_bit(a, b);
    set_bit(b, a);
  }

  int n_vertices() const { return n_; }

  bool adjacent(int a, int b) const {
    return (rows_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64)) & 1u;
  }

 private:
  void set_bit(int r, int c) {
    rows_[static_cast<std::size_t>(r) * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace entwidth
