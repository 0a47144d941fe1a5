#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zfc/graph.hpp"
#include "zfc/vertex_set.hpp"

namespace zfc {

struct Force {
  int forcer = -1;
  int forced = -1;
  bool operator==(const Force&) const = default;
};

// Outcome of running the colour-changing rule to exhaustion.
struct ClosureResult {
  VertexSet black;           // final black set
  VertexSet white_residual;  // vertices that could not be forced
  std::vector<Force> forces; // chronological, one entry per colour change
};

// Vertices i for which the self-force i -> i is disallowed.
struct ForbiddenSelfForcers {
  VertexSet members;

  static ForbiddenSelfForcers none(int n) { return {VertexSet(n)}; }
  static ForbiddenSelfForcers of(int n, std::initializer_list<int> vs) {
    return {VertexSet::of(n, vs)};
  }
};

// Reusable buffers for closure-heavy loops. Not thread-safe; use one
// workspace per thread.
class ClosureWorkspace {
 public:
  // Valid until the next run on this workspace; black()[v] != 0 iff v ended
  // black in the most recent closure.
  std::span<const uint8_t> black() const { return black_; }

 private:
  std::vector<uint8_t> black_;
  std::vector<int> white_out_;
  std::vector<int> queue_;

  friend int run_closure(const LoopDigraph&, std::span<const int>, const VertexSet*,
                         ClosureWorkspace&, std::vector<Force>*);
};

// Core propagation. Applies the colour-changing rule until no legal force
// remains, skipping any self-force v -> v with v in *forbidden. Candidate
// forcers are processed in FIFO order seeded by ascending vertex id; the
// final black set is independent of that order. Returns the black count and
// leaves per-vertex flags in ws.black(); appends the chronological force list
// to *out_forces when non-null.
int run_closure(const LoopDigraph& g, std::span<const int> initial, const VertexSet* forbidden,
                ClosureWorkspace& ws, std::vector<Force>* out_forces);

ClosureResult closure(const LoopDigraph& g, const VertexSet& initial,
                      const ForbiddenSelfForcers& forbidden);

bool is_zfs(const LoopDigraph& g, const VertexSet& s, const ForbiddenSelfForcers& forbidden);

// Minimum size of a zero forcing set, by exhaustive search over subsets in
// increasing cardinality. Guarded: throws std::length_error when
// g.vertex_count() > max_n.
int zero_forcing_number_exact(const LoopDigraph& g, const ForbiddenSelfForcers& forbidden,
                              int max_n = 25);

}  // namespace zfc
