#pragma once

#include <utility>

#include "zfc/graph.hpp"
#include "zfc/pattern.hpp"
#include "zfc/zero_forcing.hpp"

namespace zfc {

// A structured state matrix together with everything the verifier needs: the
// graph of the pattern, the graph of the loop-completed pattern, and the set
// of vertices whose diagonal entry is a free parameter (those may not force
// themselves in the second check).
class SControlInstance {
 public:
  static SControlInstance from_pattern(PatternMatrix a);
  static SControlInstance from_graph(const LoopDigraph& g);

  int dim() const { return pattern_.dim(); }
  const PatternMatrix& pattern() const { return pattern_; }
  const LoopDigraph& graph() const { return graph_; }                    // G(A)
  const LoopDigraph& modified_graph() const { return modified_graph_; }  // G(A with full diagonal)
  const ForbiddenSelfForcers& loops() const { return loops_; }
  const ForbiddenSelfForcers& no_forbidden() const { return none_; }

 private:
  explicit SControlInstance(PatternMatrix a);

  PatternMatrix pattern_;
  LoopDigraph graph_;
  LoopDigraph modified_graph_;
  ForbiddenSelfForcers loops_;
  ForbiddenSelfForcers none_;
};

struct CostParams {
  double epsilon = 0.1;
};

// Cost of a candidate input set, kept as the exact integer pair
// (cardinality, residual) so that cost differences and acceptance ratios can
// be formed without floating-point asymmetry. The scalar cost is
// cardinality + (1 + epsilon) * residual.
struct Cost {
  int cardinality = 0;
  int residual = 0;  // |W(S) union Wx(S)|

  bool feasible() const { return residual == 0; }
  double value(const CostParams& p) const {
    return cardinality + (1.0 + p.epsilon) * residual;
  }
  bool operator==(const Cost&) const = default;
};

// Exactly antisymmetric: cost_delta(a, b, p) == -cost_delta(b, a, p) in IEEE
// arithmetic, because it is formed from integer differences.
inline double cost_delta(const Cost& from, const Cost& to, const CostParams& p) {
  return (from.cardinality - to.cardinality) +
         (1.0 + p.epsilon) * (from.residual - to.residual);
}

// Repeated cost evaluation over one instance without per-call allocation.
// Not thread-safe; use one evaluator per thread.
class CostEvaluator {
 public:
  explicit CostEvaluator(const SControlInstance& inst) : inst_(&inst) {}

  Cost eval(std::span<const int> members);
  Cost eval(const VertexSet& s) { return eval(s.members()); }

 private:
  const SControlInstance* inst_;
  ClosureWorkspace ws_graph_;
  ClosureWorkspace ws_modified_;
};

// True iff S is a zero forcing set of G(A) and also one of the modified
// graph under the no-self-force restriction at looped vertices; equivalently,
// the pair (A, B(S)) is strong structurally controllable.
bool verify(const SControlInstance& inst, const VertexSet& s);

// (W(S), Wx(S)): the unforced whites of the two closures.
std::pair<VertexSet, VertexSet> white_residuals(const SControlInstance& inst, const VertexSet& s);

Cost cost(const SControlInstance& inst, const VertexSet& s);
double cost_value(const SControlInstance& inst, const VertexSet& s, const CostParams& params);

// S union W(S) union Wx(S). Always verifies true; returns S unchanged when S
// is already feasible.
VertexSet repair(const SControlInstance& inst, const VertexSet& s);

}  // namespace zfc
