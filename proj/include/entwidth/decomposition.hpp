#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "entwidth/bipartition.hpp"
#include "entwidth/measures.hpp"
#include "entwidth/parallel.hpp"

namespace entwidth {

// A subcubic tree (every vertex has degree 1 or 3) whose leaves are labelled
// bijectively by mode indices. Removing an edge bipartitions the modes.
class Decomposition {
 public:
  Decomposition(int n_modes, std::vector<std::array<int, 2>> edges,
                std::vector<int> leaf_mode)
      : n_modes_(n_modes), edges_(std::move(edges)), leaf_mode_(std::move(leaf_mode)) {
    validate();
  }

  int n_modes() const { return n_modes_; }
  int vertex_count() const { return static_cast<int>(leaf_mode_.size()); }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }

  // Mode label of a leaf vertex, -1 for internal vertices.
  int mode_of(int vertex) const { return leaf_mode_.at(vertex); }

  // One bipartition per tree edge, each canonicalized to contain mode 0.
  std::vector<Bipartition> edge_bipartitions() const {
    std::vector<Bipartition> out;
    out.reserve(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      std::vector<int> side = modes_on_side(e);
      Bipartition cut(std::move(side), n_modes_);
      out.push_back(cut.contains(0) ? std::move(cut) : cut.complemented());
    }
    return out;
  }

 private:
  // Leaf modes in the component of edges_[e][0] once edge e is removed.
  std::vector<int> modes_on_side(std::size_t e) const {
    const int v = vertex_count();
    std::vector<std::vector<int>> adj(v);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i == e) continue;
      adj[edges_[i][0]].push_back(edges_[i][1]);
      adj[edges_[i][1]].push_back(edges_[i][0]);
    }
    std::vector<int> modes;
    std::vector<char> seen(v, 0);
    std::vector<int> stack{edges_[e][0]};
    seen[edges_[e][0]] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      if (leaf_mode_[u] >= 0) modes.push_back(leaf_mode_[u]);
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return modes;
  }

  void validate() const {
    if (n_modes_ < 2)
      throw std::invalid_argument("Decomposition: need at least two modes");
    const int v = vertex_count();
    if (static_cast<int>(edges_.size()) != v - 1)
      throw std::invalid_argument("Decomposition: edge count must be vertex count - 1");

    std::vector<int> degree(v, 0);
    for (const auto& e : edges_) {
      if (e[0] < 0 || e[1] < 0 || e[0] >= v || e[1] >= v || e[0] == e[1])
        throw std::invalid_argument("Decomposition: bad edge");
      ++degree[e[0]];
      ++degree[e[1]];
    }

    std::vector<char> mode_seen(n_modes_, 0);
    for (int u = 0; u < v; ++u) {
      if (degree[u] != 1 && degree[u] != 3)
        throw std::invalid_argument("Decomposition: tree is not subcubic");
      const int mode = leaf_mode_[u];
      if (degree[u] == 1) {
        if (mode < 0 || mode >= n_modes_ || mode_seen[mode])
          throw std::invalid_argument("Decomposition: leaf labelling is not a bijection");
        mode_seen[mode] = 1;
      } else if (mode != -1) {
        throw std::invalid_argument("Decomposition: internal vertex carries a mode label");
      }
    }
    for (int m = 0; m < n_modes_; ++m)
      if (!mode_seen[m])
        throw std::invalid_argument("Decomposition: leaf labelling is not a bijection");

    // Connectivity; with |E| = |V|-1 this also rules out cycles.
    std::vector<std::vector<int>> adj(v);
    for (const auto& e : edges_) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
    std::vector<char> seen(v, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 0;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++visited;
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (visited != v)
      throw std::invalid_argument("Decomposition: tree is not connected");
  }

  int n_modes_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<int> leaf_mode_;
};

namespace detail {

// Mutable scratch tree used while assembling decompositions. Degree-2
// vertices induce only one bipartition and are removed by merging their
// edges; dangling unlabelled vertices are dropped.
struct TreeBuilder {
  std::vector<int> leaf_mode;
  std::vector<std::array<int, 2>> edges;

  int add_vertex(int mode) {
    leaf_mode.push_back(mode);
    return static_cast<int>(leaf_mode.size()) - 1;
  }

  void add_edge(int a, int b) { edges.push_back({a, b}); }

  Decomposition finish(int n_modes) {
    for (bool changed = true; changed;) {
      changed = false;
      const int v = static_cast<int>(leaf_mode.size());
      std::vector<int> degree(v, 0);
      for (const auto& e : edges) {
        ++degree[e[0]];
        ++degree[e[1]];
      }
      for (int u = 0; u < v && !changed; ++u) {
        if (leaf_mode[u] >= 0) continue;
        if (degree[u] == 1) {
          for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i][0] == u || edges[i][1] == u) {
              edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
              break;
            }
          drop_vertex(u);
          changed = true;
        } else if (degree[u] == 2) {
          int nb[2];
          int found = 0;
          for (std::size_t i = edges.size(); i-- > 0;)
            if (edges[i][0] == u || edges[i][1] == u) {
              nb[found++] = edges[i][0] == u ? edges[i][1] : edges[i][0];
              edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
            }
          add_edge(nb[0], nb[1]);
          drop_vertex(u);
          changed = true;
        }
      }
    }
    return Decomposition(n_modes, edges, leaf_mode);
  }

 private:
  void drop_vertex(int u) {
    const int last = static_cast<int>(leaf_mode.size()) - 1;
    if (u != last) {
      leaf_mode[u] = leaf_mode[last];
      for (auto& e : edges) {
        if (e[0] == last) e[0] = u;
        if (e[1] == last) e[1] = u;
      }
    }
    leaf_mode.pop_back();
  }
};

}  // namespace detail

// Chains one simple caterpillar tree per block along a spine. Edges inside a
// block induce the nested prefixes {v_1}, {v_1,v_2}, ...; spine edges induce
// the block prefix unions B_1, B_1 u B_2, ...
inline Decomposition string_decomposition(const std::vector<std::vector<int>>& blocks) {
  int n_modes = 0;
  for (const auto& block : blocks) {
    if (block.empty())
      throw std::invalid_argument("string_decomposition: empty block");
    n_modes += static_cast<int>(block.size());
  }
  if (n_modes < 2)
    throw std::invalid_argument("string_decomposition: need at least two modes");
  std::vector<char> seen(n_modes, 0);
  for (const auto& block : blocks)
    for (int m : block) {
      if (m < 0 || m >= n_modes || seen[m])
        throw std::invalid_argument("string_decomposition: blocks do not partition the modes");
      seen[m] = 1;
    }

  detail::TreeBuilder tree;
  std::vector<int> leaf_of(n_modes);
  for (int m = 0; m < n_modes; ++m) leaf_of[m] = tree.add_vertex(m);

  std::vector<int> attach;  // one hook per block
  for (const auto& block : blocks) {
    if (block.size() == 1) {
      attach.push_back(leaf_of[block[0]]);
      continue;
    }
    int chain = tree.add_vertex(-1);
    tree.add_edge(leaf_of[block[0]], chain);
    tree.add_edge(leaf_of[block[1]], chain);
    for (std::size_t i = 2; i < block.size(); ++i) {
      const int next = tree.add_vertex(-1);
      tree.add_edge(chain, next);
      tree.add_edge(leaf_of[block[i]], next);
      chain = next;
    }
    attach.push_back(chain);
  }

  int prev_spine = -1;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const int spine = tree.add_vertex(-1);
    tree.add_edge(attach[i], spine);
    if (prev_spine >= 0) tree.add_edge(prev_spine, spine);
    prev_spine = spine;
  }

  return tree.finish(n_modes);
}

// Anti-diagonal blocks of the row-major l-by-l grid, strung from the top-left
// corner to the bottom-right one.
inline Decomposition diagonal_decomposition(int l) {
  if (l < 2) throw std::invalid_argument("diagonal_decomposition: need l >= 2");
  std::vector<std::vector<int>> blocks;
  for (int d = 0; d <= 2 * (l - 1); ++d) {
    std::vector<int> block;
    for (int r = std::max(0, d - l + 1); r <= std::min(d, l - 1); ++r)
      block.push_back(r * l + (d - r));
    blocks.push_back(std::move(block));
  }
  return string_decomposition(blocks);
}

// Row blocks of the grid, strung from top to bottom.
inline Decomposition rectangular_decomposition(int l) {
  if (l < 2) throw std::invalid_argument("rectangular_decomposition: need l >= 2");
  std::vector<std::vector<int>> blocks;
  for (int r = 0; r < l; ++r) {
    std::vector<int> block;
    for (int c = 0; c < l; ++c) block.push_back(r * l + c);
    blocks.push_back(std::move(block));
  }
  return string_decomposition(blocks);
}

struct DecompositionWidth {
  double value;
  Bipartition maximizing;
};

// Width of a decomposition: the maximum cut value over its edge bipartitions.
// The first edge attaining the maximum provides the witness bipartition.
inline DecompositionWidth width_with_witness(const Decomposition& d, CutCache& cut,
                                             int threads = 1) {
  const std::vector<Bipartition> cuts = d.edge_bipartitions();
  std::vector<double> values(cuts.size());
  parallel_for(cuts.size(), threads,
               [&](std::size_t i) { values[i] = cut(cuts[i]); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (values[i] > values[best]) best = i;
  return DecompositionWidth{values[best], cuts[best]};
}

inline double width(const Decomposition& d, CutCache& cut, int threads = 1) {
  return width_with_witness(d, cut, threads).value;
}

inline double width(const Decomposition& d, const CutFunction& cut, int threads = 1) {
  CutCache cache(cut);
  return width_with_witness(d, cache, threads).value;
}

}  // namespace entwidth
