#pragma once

#include <span>
#include <utility>
#include <vector>

#include "zfc/pattern.hpp"

namespace zfc {

// Directed graph on vertices [0, n) that permits self-loops. Stores both
// out- and in-adjacency (the closure engine walks in-neighbors of a forced
// vertex). Duplicate edges are collapsed; neighbor lists are kept sorted.
class LoopDigraph {
 public:
  LoopDigraph() = default;
  LoopDigraph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(out_adj_.size()); }

  std::span<const int> out(int u) const {
    return {out_adj_.data() + out_off_[u], out_adj_.data() + out_off_[u + 1]};
  }
  std::span<const int> in(int v) const {
    return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
  }

  int out_degree(int u) const { return out_off_[u + 1] - out_off_[u]; }
  bool has_edge(int u, int v) const;
  bool has_self_loop(int v) const { return has_edge(v, v); }

  // Edges in lexicographic (src, dst) order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const LoopDigraph& other) const {
    return n_ == other.n_ && out_off_ == other.out_off_ && out_adj_ == other.out_adj_;
  }

 private:
  int n_ = 0;
  std::vector<int> out_off_, out_adj_;
  std::vector<int> in_off_, in_adj_;
};

// Graph of a pattern: one edge (j -> i) per star A[i][j]; the column index is
// the edge source.
LoopDigraph graph_of(const PatternMatrix& a);

// Inverse of graph_of: pattern with A[i][j] starred iff the edge (j -> i)
// exists.
PatternMatrix pattern_of(const LoopDigraph& g);

// Graph under the vertex relabeling v -> perm[v].
LoopDigraph relabel(const LoopDigraph& g, std::span<const int> perm);

}  // namespace zfc
