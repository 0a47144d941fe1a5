#pragma once

#include <cstdint>

#include "zfc/pattern.hpp"

namespace zfc {

// Directed Erdos-Renyi pattern: every entry of the n-by-n matrix is a star
// independently with probability p = (1 + delta) * ln(n) / n, clamped to 1.
// Entries are drawn in row-major order from a SplitMix64 stream, so the
// result is a pure function of (n, delta, seed).
PatternMatrix gen_erdos_renyi(int n, double delta, uint64_t seed);

double erdos_renyi_edge_probability(int n, double delta);

// Self-damped random tree: vertex 0 is the root, vertex k >= 1 attaches to a
// parent drawn uniformly from [0, k) (uniform random recursive tree), edges
// point parent -> child, and every diagonal entry is a star.
PatternMatrix gen_selfdamped_tree(int n, uint64_t seed);

}  // namespace zfc
