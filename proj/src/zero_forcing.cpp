#include "zfc/zero_forcing.hpp"

#include <stdexcept>

namespace zfc {

int run_closure(const LoopDigraph& g, std::span<const int> initial, const VertexSet* forbidden,
                ClosureWorkspace& ws, std::vector<Force>* out_forces) {
  const int n = g.vertex_count();
  if (forbidden && forbidden->universe_size() != n) {
    throw std::invalid_argument("run_closure: forbidden set universe does not match graph");
  }
  ws.black_.assign(n, 0);
  ws.white_out_.assign(n, 0);
  ws.queue_.clear();

  int black_count = 0;
  for (int v : initial) {
    if (!ws.black_[v]) {
      ws.black_[v] = 1;
      ++black_count;
    }
  }

  // white_out_[u] = number of white out-neighbors of u. A vertex can apply a
  // force exactly when this count is 1 (and the force is not forbidden); the
  // count only decreases, so each vertex enters the queue at most twice
  // (once from seeding, once on the 1-transition).
  for (int u = 0; u < n; ++u) {
    int count = 0;
    for (int v : g.out(u)) count += ws.black_[v] ? 0 : 1;
    ws.white_out_[u] = count;
    if (count == 1) ws.queue_.push_back(u);
  }

  size_t head = 0;
  while (head < ws.queue_.size()) {
    int u = ws.queue_[head++];
    if (ws.white_out_[u] != 1) continue;
    int target = -1;
    for (int v : g.out(u)) {
      if (!ws.black_[v]) {
        target = v;
        break;
      }
    }
    // target == u is the self-force case; it is legal only when not forbidden.
    if (target == u && forbidden && forbidden->contains(u)) continue;
    ws.black_[target] = 1;
    ++black_count;
    if (out_forces) out_forces->push_back({u, target});
    for (int w : g.in(target)) {
      if (--ws.white_out_[w] == 1) ws.queue_.push_back(w);
    }
  }
  return black_count;
}

ClosureResult closure(const LoopDigraph& g, const VertexSet& initial,
                      const ForbiddenSelfForcers& forbidden) {
  const int n = g.vertex_count();
  if (initial.universe_size() != n) {
    throw std::invalid_argument("closure: initial set universe does not match graph");
  }
  ClosureWorkspace ws;
  ClosureResult result;
  result.forces.reserve(n);
  run_closure(g, initial.members(), &forbidden.members, ws, &result.forces);
  result.black = VertexSet(n);
  result.white_residual = VertexSet(n);
  for (int v = 0; v < n; ++v) {
    if (ws.black()[v]) {
      result.black.insert(v);
    } else {
      result.white_residual.insert(v);
    }
  }
  return result;
}

bool is_zfs(const LoopDigraph& g, const VertexSet& s, const ForbiddenSelfForcers& forbidden) {
  ClosureWorkspace ws;
  return run_closure(g, s.members(), &forbidden.members, ws, nullptr) == g.vertex_count();
}

namespace {

// Lexicographically next k-combination over [0, n); returns false when done.
bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

int zero_forcing_number_exact(const LoopDigraph& g, const ForbiddenSelfForcers& forbidden,
                              int max_n) {
  const int n = g.vertex_count();
  if (n > max_n) {
    throw std::length_error("zero_forcing_number_exact: vertex count " + std::to_string(n) +
                            " exceeds guard " + std::to_string(max_n));
  }
  ClosureWorkspace ws;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    do {
      if (run_closure(g, subset, &forbidden.members, ws, nullptr) == n) return k;
    } while (next_combination(subset, n));
  }
  return n;  // unreachable: S = V always forces everything
}

}  // namespace zfc
