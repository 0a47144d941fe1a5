#include "zfc/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace zfc {

namespace {

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

// Kuhn's augmenting-path matching on the relation "u can potentially force
// v": v in out(u), with u == v allowed only where the self-force is legal.
struct ForceMatcher {
  const LoopDigraph& g;
  const VertexSet& forbidden_self;
  std::vector<int> match_of;  // forced vertex -> forcer
  std::vector<char> visited;

  bool try_forcer(int u) {
    for (int v : g.out(u)) {
      if (visited[v]) continue;
      if (u == v && forbidden_self.contains(u)) continue;
      visited[v] = 1;
      if (match_of[v] == -1 || try_forcer(match_of[v])) {
        match_of[v] = u;
        return true;
      }
    }
    return false;
  }
};

int max_force_matching(const LoopDigraph& g, const VertexSet& forbidden_self) {
  const int n = g.vertex_count();
  ForceMatcher m{g, forbidden_self, std::vector<int>(n, -1), std::vector<char>(n)};
  int matching = 0;
  for (int u = 0; u < n; ++u) {
    std::fill(m.visited.begin(), m.visited.end(), 0);
    if (m.try_forcer(u)) ++matching;
  }
  return matching;
}

struct LevelScan {
  bool found = false;
  std::vector<VertexSet> witnesses;
  long long witness_count = 0;
  long long checked = 0;
};

// Checks every k-subset, collecting all feasible ones.
LevelScan scan_cardinality(const SControlInstance& inst, CostEvaluator& eval, int k,
                           int witness_cap) {
  const int n = inst.dim();
  LevelScan scan;
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  do {
    ++scan.checked;
    if (eval.eval(subset).feasible()) {
      scan.found = true;
      ++scan.witness_count;
      if (static_cast<int>(scan.witnesses.size()) < witness_cap) {
        VertexSet w(n);
        for (int v : subset) w.insert(v);
        scan.witnesses.push_back(std::move(w));
      }
    }
  } while (next_combination(subset, n));
  return scan;
}

std::optional<ExactResult> search(const SControlInstance& inst, int k_max, int witness_cap,
                                  int k_min) {
  CostEvaluator eval(inst);
  ExactResult result;
  for (int k = k_min; k <= k_max; ++k) {
    LevelScan scan = scan_cardinality(inst, eval, k, witness_cap);
    result.subsets_checked += scan.checked;
    if (scan.found) {
      result.optimum = k;
      result.witnesses = std::move(scan.witnesses);
      result.witness_count = scan.witness_count;
      return result;
    }
  }
  return std::nullopt;
}

}  // namespace

int forcing_lower_bound(const SControlInstance& inst) {
  const int n = inst.dim();
  int bound_graph = n - max_force_matching(inst.graph(), inst.no_forbidden().members);
  int bound_modified = n - max_force_matching(inst.modified_graph(), inst.loops().members);
  return std::max(bound_graph, bound_modified);
}

ExactResult solve_exact(const SControlInstance& inst, int max_n, int witness_cap) {
  const int n = inst.dim();
  if (n > max_n) {
    throw std::length_error("solve_exact: dimension " + std::to_string(n) + " exceeds guard " +
                            std::to_string(max_n));
  }
  // S = V is always feasible, so the search cannot come back empty.
  return *search(inst, n, witness_cap, 0);
}

std::optional<ExactResult> solve_exact_bounded(const SControlInstance& inst, int k_max,
                                               int witness_cap, bool use_lower_bound) {
  if (k_max < 0) throw std::invalid_argument("solve_exact_bounded: k_max must be >= 0");
  int k_cap = std::min(k_max, inst.dim());
  int k_min = 0;
  if (use_lower_bound) {
    k_min = forcing_lower_bound(inst);
    if (k_min > k_cap) return std::nullopt;
  }
  return search(inst, k_cap, witness_cap, k_min);
}

}  // namespace zfc
