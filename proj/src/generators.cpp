#include "zfc/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "zfc/rng.hpp"

namespace zfc {

double erdos_renyi_edge_probability(int n, double delta) {
  double p = (1.0 + delta) * std::log(static_cast<double>(n)) / n;
  return p > 1.0 ? 1.0 : p;
}

PatternMatrix gen_erdos_renyi(int n, double delta, uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_erdos_renyi: n must be >= 2");
  if (delta <= 0) throw std::invalid_argument("gen_erdos_renyi: delta must be > 0");
  double p = erdos_renyi_edge_probability(n, delta);
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> stars;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rng.next_double() < p) stars.emplace_back(i, j);
    }
  }
  return PatternMatrix(n, stars);
}

PatternMatrix gen_selfdamped_tree(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_selfdamped_tree: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> stars;
  for (int i = 0; i < n; ++i) stars.emplace_back(i, i);
  for (int child = 1; child < n; ++child) {
    int parent = static_cast<int>(rng.next_below(static_cast<uint64_t>(child)));
    // Edge parent -> child corresponds to star A[child][parent].
    stars.emplace_back(child, parent);
  }
  return PatternMatrix(n, stars);
}

}  // namespace zfc
