#include "zfc/scontrol.hpp"

#include <stdexcept>

namespace zfc {

SControlInstance::SControlInstance(PatternMatrix a)
    : pattern_(std::move(a)),
      graph_(graph_of(pattern_)),
      modified_graph_(graph_of(modified_pattern(pattern_))),
      loops_{pattern_.diagonal_stars()},
      none_(ForbiddenSelfForcers::none(pattern_.dim())) {}

SControlInstance SControlInstance::from_pattern(PatternMatrix a) {
  return SControlInstance(std::move(a));
}

SControlInstance SControlInstance::from_graph(const LoopDigraph& g) {
  return SControlInstance(pattern_of(g));
}

Cost CostEvaluator::eval(std::span<const int> members) {
  const SControlInstance& inst = *inst_;
  run_closure(inst.graph(), members, nullptr, ws_graph_, nullptr);
  run_closure(inst.modified_graph(), members, &inst.loops().members, ws_modified_, nullptr);
  int residual = 0;
  const int n = inst.dim();
  auto black_g = ws_graph_.black();
  auto black_gx = ws_modified_.black();
  for (int v = 0; v < n; ++v) {
    if (!black_g[v] || !black_gx[v]) ++residual;
  }
  return Cost{static_cast<int>(members.size()), residual};
}

namespace {

void check_set(const SControlInstance& inst, const VertexSet& s, const char* where) {
  if (s.universe_size() != inst.dim()) {
    throw std::invalid_argument(std::string(where) + ": set universe does not match instance");
  }
}

}  // namespace

bool verify(const SControlInstance& inst, const VertexSet& s) {
  check_set(inst, s, "verify");
  CostEvaluator eval(inst);
  return eval.eval(s).feasible();
}

std::pair<VertexSet, VertexSet> white_residuals(const SControlInstance& inst, const VertexSet& s) {
  check_set(inst, s, "white_residuals");
  ClosureResult on_graph = closure(inst.graph(), s, inst.no_forbidden());
  ClosureResult on_modified = closure(inst.modified_graph(), s, inst.loops());
  return {std::move(on_graph.white_residual), std::move(on_modified.white_residual)};
}

Cost cost(const SControlInstance& inst, const VertexSet& s) {
  check_set(inst, s, "cost");
  CostEvaluator eval(inst);
  return eval.eval(s);
}

double cost_value(const SControlInstance& inst, const VertexSet& s, const CostParams& params) {
  if (params.epsilon <= 0) throw std::invalid_argument("cost_value: epsilon must be > 0");
  return cost(inst, s).value(params);
}

VertexSet repair(const SControlInstance& inst, const VertexSet& s) {
  check_set(inst, s, "repair");
  auto [white_g, white_gx] = white_residuals(inst, s);
  VertexSet repaired = s;
  for (int v : white_g.members()) repaired.insert(v);
  for (int v : white_gx.members()) repaired.insert(v);
  return repaired;
}

}  // namespace zfc
