#include "zfc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace zfc {

LoopDigraph::LoopDigraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("LoopDigraph: negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::out_of_range("LoopDigraph: edge endpoint out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  out_off_.assign(n + 1, 0);
  in_off_.assign(n + 1, 0);
  for (auto [u, v] : edges) {
    ++out_off_[u + 1];
    ++in_off_[v + 1];
  }
  for (int i = 0; i < n; ++i) {
    out_off_[i + 1] += out_off_[i];
    in_off_[i + 1] += in_off_[i];
  }
  out_adj_.resize(edges.size());
  in_adj_.resize(edges.size());
  std::vector<int> out_cursor(out_off_.begin(), out_off_.end() - 1);
  std::vector<int> in_cursor(in_off_.begin(), in_off_.end() - 1);
  for (auto [u, v] : edges) {
    out_adj_[out_cursor[u]++] = v;
    in_adj_[in_cursor[v]++] = u;
  }
  // Lexicographic edge order leaves out-lists sorted; in-lists need a pass.
  for (int v = 0; v < n; ++v) {
    std::sort(in_adj_.begin() + in_off_[v], in_adj_.begin() + in_off_[v + 1]);
  }
}

bool LoopDigraph::has_edge(int u, int v) const {
  auto nbrs = out(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> LoopDigraph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(out_adj_.size());
  for (int u = 0; u < n_; ++u) {
    for (int v : out(u)) result.emplace_back(u, v);
  }
  return result;
}

LoopDigraph graph_of(const PatternMatrix& a) {
  int n = a.dim();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.star(i, j)) edges.emplace_back(j, i);
    }
  }
  return LoopDigraph(n, std::move(edges));
}

PatternMatrix pattern_of(const LoopDigraph& g) {
  std::vector<std::pair<int, int>> stars;
  for (auto [u, v] : g.edges()) stars.emplace_back(v, u);
  return PatternMatrix(g.vertex_count(), stars);
}

LoopDigraph relabel(const LoopDigraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return LoopDigraph(g.vertex_count(), std::move(edges));
}

}  // namespace zfc
