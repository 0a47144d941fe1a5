#pragma once

#include <optional>
#include <vector>

#include "zfc/scontrol.hpp"

namespace zfc {

struct ExactResult {
  int optimum = 0;
  // All optimal sets in lexicographic order of their sorted member lists,
  // truncated to witness_cap entries; witness_count is the full number found.
  std::vector<VertexSet> witnesses;
  long long witness_count = 0;
  long long subsets_checked = 0;
};

// Exhaustive search over subsets in increasing cardinality (equal-cardinality
// subsets in lexicographic order). Stops at the first cardinality containing
// a feasible set and collects every optimal witness. Throws std::length_error
// when inst.dim() > max_n.
ExactResult solve_exact(const SControlInstance& inst, int max_n = 20, int witness_cap = 1000);

// As solve_exact but searches only cardinalities <= k_max; nullopt when no
// feasible set that small exists. Skips cardinalities below
// forcing_lower_bound(inst), which also certifies fast 'absent' answers; pass
// use_lower_bound = false for the plain enumeration (the two are checked
// against each other in the property suite).
std::optional<ExactResult> solve_exact_bounded(const SControlInstance& inst, int k_max,
                                               int witness_cap = 1000,
                                               bool use_lower_bound = true);

// Sound lower bound on the minimum feasible cardinality: in any closure each
// vertex applies at most one force (after forcing, all its out-neighbors are
// black for good), so all n - |S| non-seed vertices must be matched to
// distinct forcers in the potential-force relation. The bound is
// n - max_matching, taken over both closures' relations.
int forcing_lower_bound(const SControlInstance& inst);

}  // namespace zfc
