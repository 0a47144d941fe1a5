#include "zfc/mcmc.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace zfc {

void AnnealConfig::validate() const {
  if (t0 <= 0 || t_stop <= 0) throw std::invalid_argument("AnnealConfig: temperatures must be > 0");
  if (t_stop >= t0) throw std::invalid_argument("AnnealConfig: t_stop must be below t0");
  if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("AnnealConfig: alpha must be in (0,1)");
  if (epoch_len < 1) throw std::invalid_argument("AnnealConfig: epoch_len must be >= 1");
  if (epsilon <= 0) throw std::invalid_argument("AnnealConfig: epsilon must be > 0");
  if (n_chains < 1) throw std::invalid_argument("AnnealConfig: n_chains must be >= 1");
}

namespace {

int draw_from_complement(const VertexSet& s, SplitMix64& rng) {
  const uint64_t n = static_cast<uint64_t>(s.universe_size());
  for (;;) {
    int v = static_cast<int>(rng.next_below(n));
    if (!s.contains(v)) return v;
  }
}

}  // namespace

Proposal propose_move(const VertexSet& s, SplitMix64& rng) {
  const int n = s.universe_size();
  const int sz = s.size();
  const double p_add = 2.0 * (n - sz) / (3.0 * n);
  const double p_remove = 2.0 * sz / (3.0 * n);
  const double u = rng.next_double();
  if (u < p_add) {
    return {MoveKind::Add, draw_from_complement(s, rng), -1};
  }
  if (u < p_add + p_remove) {
    int v = s.member_at(static_cast<int>(rng.next_below(static_cast<uint64_t>(sz))));
    return {MoveKind::Remove, -1, v};
  }
  if (sz == 0 || sz == n) return {MoveKind::Stay, -1, -1};
  int out = s.member_at(static_cast<int>(rng.next_below(static_cast<uint64_t>(sz))));
  int in = draw_from_complement(s, rng);
  return {MoveKind::Swap, in, out};
}

VertexSet propose(const VertexSet& s, SplitMix64& rng, MoveKind* kind) {
  Proposal p = propose_move(s, rng);
  if (kind) *kind = p.kind;
  VertexSet next = s;
  apply_move(next, p);
  return next;
}

void apply_move(VertexSet& s, const Proposal& p) {
  if (p.removed >= 0) s.remove(p.removed);
  if (p.added >= 0) s.insert(p.added);
}

void undo_move(VertexSet& s, const Proposal& p) {
  if (p.added >= 0) s.remove(p.added);
  if (p.removed >= 0) s.insert(p.removed);
}

bool accept_delta(double delta, double t, SplitMix64& rng) {
  if (t <= 0) throw std::invalid_argument("accept: temperature must be > 0");
  if (delta >= 0) return true;
  return rng.next_double() < std::exp(delta / t);
}

bool accept(double cost_s, double cost_proposed, double t, SplitMix64& rng) {
  return accept_delta(cost_s - cost_proposed, t, rng);
}

namespace {

struct BestTracker {
  std::optional<VertexSet> set;
  int cardinality = std::numeric_limits<int>::max();

  void consider(const VertexSet& s, const Cost& c) {
    if (c.feasible() && c.cardinality < cardinality) {
      set = s;
      cardinality = c.cardinality;
    }
  }
};

RunReport run_single_chain(const SControlInstance& inst, const AnnealConfig& config,
                           uint64_t seed) {
  const int n = inst.dim();
  const CostParams params{config.epsilon};
  SplitMix64 rng(seed);
  CostEvaluator eval(inst);

  VertexSet s(n);
  Cost cost_s = eval.eval(s);
  BestTracker best;
  best.consider(s, cost_s);

  RunReport report;
  report.seed = seed;
  report.config = config;
  report.cost_trace.emplace_back(0, cost_s.value(params));

  double temperature = config.t0;
  long long iteration = 0;
  while (config.t_stop <= temperature) {
    Proposal move = propose_move(s, rng);
    if (move.kind == MoveKind::Stay) {
      // C(S_p) = C(S): accepted with probability 1, nothing changes.
    } else {
      apply_move(s, move);
      Cost cost_p = eval.eval(s);
      best.consider(s, cost_p);
      double delta = cost_delta(cost_s, cost_p, params);
      if (accept_delta(delta, temperature, rng)) {
        cost_s = cost_p;
      } else {
        undo_move(s, move);
      }
    }
    ++iteration;
    if (iteration % config.epoch_len == 0) {
      temperature *= config.alpha;
      report.cost_trace.emplace_back(iteration, cost_s.value(params));
    }
  }

  report.final_set = s;
  report.iterations = iteration;
  if (config.mode == OutputMode::Faithful) {
    report.output_set = s;
  } else if (best.set) {
    report.output_set = *best.set;
  } else {
    report.output_set = repair(inst, s);
  }
  report.output_cardinality = report.output_set.size();
  report.feasible = eval.eval(report.output_set).feasible();
  return report;
}

}  // namespace

RunReport run(const SControlInstance& inst, const AnnealConfig& config) {
  config.validate();
  auto start = std::chrono::steady_clock::now();

  RunReport result;
  if (config.n_chains == 1) {
    result = run_single_chain(inst, config, config.seed);
  } else {
    std::vector<RunReport> reports(config.n_chains);
    std::vector<std::thread> workers;
    workers.reserve(config.n_chains);
    for (int c = 0; c < config.n_chains; ++c) {
      uint64_t seed = c == 0 ? config.seed : mix_seed({config.seed, static_cast<uint64_t>(c)});
      workers.emplace_back([&inst, &config, &reports, c, seed] {
        reports[c] = run_single_chain(inst, config, seed);
      });
    }
    for (auto& w : workers) w.join();
    int pick = 0;
    for (int c = 1; c < config.n_chains; ++c) {
      const RunReport& a = reports[c];
      const RunReport& b = reports[pick];
      bool better = (a.feasible && !b.feasible) ||
                    (a.feasible == b.feasible && a.output_cardinality < b.output_cardinality);
      if (better) pick = c;
    }
    result = std::move(reports[pick]);
    result.chains_run = config.n_chains;
  }

  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

size_t checked_state_count(const SControlInstance& inst, int max_n, const char* where) {
  const int n = inst.dim();
  if (n > max_n) {
    throw std::length_error(std::string(where) + ": dimension " + std::to_string(n) +
                            " exceeds guard " + std::to_string(max_n));
  }
  return size_t{1} << n;
}

std::vector<Cost> costs_by_mask(const SControlInstance& inst, size_t num_states) {
  CostEvaluator eval(inst);
  std::vector<Cost> costs(num_states);
  std::vector<int> members;
  for (size_t mask = 0; mask < num_states; ++mask) {
    members.clear();
    for (int v = 0; v < inst.dim(); ++v) {
      if (mask & (size_t{1} << v)) members.push_back(v);
    }
    costs[mask] = eval.eval(members);
  }
  return costs;
}

}  // namespace

std::vector<double> build_exact_tpm(const SControlInstance& inst, double temperature,
                                    const CostParams& params, int max_n) {
  const size_t m = checked_state_count(inst, max_n, "build_exact_tpm");
  const int n = inst.dim();
  if (temperature <= 0) throw std::invalid_argument("build_exact_tpm: temperature must be > 0");
  const std::vector<Cost> costs = costs_by_mask(inst, m);

  std::vector<double> tpm(m * m, 0.0);
  const double p_single = 2.0 / (3.0 * n);
  for (size_t mask = 0; mask < m; ++mask) {
    const int sz = std::popcount(mask);
    double off_diagonal = 0.0;
    auto transition = [&](size_t other, double proposal_prob) {
      double delta = cost_delta(costs[mask], costs[other], params);
      double pr = proposal_prob * std::min(1.0, std::exp(delta / temperature));
      tpm[mask * m + other] = pr;
      off_diagonal += pr;
    };
    for (int v = 0; v < n; ++v) {
      transition(mask ^ (size_t{1} << v), p_single);
    }
    if (sz >= 1 && sz <= n - 1) {
      const double p_swap = 1.0 / (3.0 * sz * (n - sz));
      for (int x = 0; x < n; ++x) {
        if (!(mask & (size_t{1} << x))) continue;
        for (int y = 0; y < n; ++y) {
          if (mask & (size_t{1} << y)) continue;
          transition(mask ^ (size_t{1} << x) ^ (size_t{1} << y), p_swap);
        }
      }
    }
    tpm[mask * m + mask] = 1.0 - off_diagonal;
  }
  return tpm;
}

std::vector<double> gibbs_distribution(const SControlInstance& inst, double temperature,
                                       const CostParams& params) {
  const size_t m = checked_state_count(inst, 25, "gibbs_distribution");
  if (temperature <= 0) throw std::invalid_argument("gibbs_distribution: temperature must be > 0");
  const std::vector<Cost> costs = costs_by_mask(inst, m);
  double min_cost = std::numeric_limits<double>::infinity();
  for (const Cost& c : costs) min_cost = std::min(min_cost, c.value(params));
  std::vector<double> pi(m);
  double z = 0.0;
  for (size_t mask = 0; mask < m; ++mask) {
    pi[mask] = std::exp(-(costs[mask].value(params) - min_cost) / temperature);
    z += pi[mask];
  }
  for (double& p : pi) p /= z;
  return pi;
}

std::vector<double> stationary_distribution(const std::vector<double>& tpm, int num_states) {
  const int m = num_states;
  if (tpm.size() != static_cast<size_t>(m) * m) {
    throw std::invalid_argument("stationary_distribution: matrix size mismatch");
  }
  // Solve (P^T - I) pi = 0 with the last equation replaced by sum(pi) = 1.
  std::vector<double> a(static_cast<size_t>(m) * (m + 1), 0.0);
  auto at = [&](int r, int c) -> double& { return a[static_cast<size_t>(r) * (m + 1) + c]; };
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) at(r, c) = tpm[static_cast<size_t>(c) * m + r];
    at(r, r) -= 1.0;
  }
  for (int c = 0; c < m; ++c) at(m - 1, c) = 1.0;
  at(m - 1, m) = 1.0;

  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int r = col + 1; r < m; ++r) {
      if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
    }
    if (pivot != col) {
      for (int c = col; c <= m; ++c) std::swap(at(col, c), at(pivot, c));
    }
    double d = at(col, col);
    if (d == 0.0) throw std::runtime_error("stationary_distribution: singular system");
    for (int r = col + 1; r < m; ++r) {
      double f = at(r, col) / d;
      if (f == 0.0) continue;
      for (int c = col; c <= m; ++c) at(r, c) -= f * at(col, c);
    }
  }
  std::vector<double> pi(m);
  for (int r = m - 1; r >= 0; --r) {
    double acc = at(r, m);
    for (int c = r + 1; c < m; ++c) acc -= at(r, c) * pi[c];
    pi[r] = acc / at(r, r);
  }
  return pi;
}

std::vector<double> empirical_distribution(const SControlInstance& inst, double temperature,
                                           long long steps, long long burn_in, uint64_t seed,
                                           const CostParams& params) {
  const size_t m = checked_state_count(inst, 10, "empirical_distribution");
  if (temperature <= 0) {
    throw std::invalid_argument("empirical_distribution: temperature must be > 0");
  }
  std::vector<double> freq(m, 0.0);
  if (steps <= 0) return freq;

  SplitMix64 rng(seed);
  CostEvaluator eval(inst);
  VertexSet s(inst.dim());
  Cost cost_s = eval.eval(s);
  uint64_t mask = 0;
  std::vector<long long> counts(m, 0);
  for (long long t = 0; t < burn_in + steps; ++t) {
    Proposal move = propose_move(s, rng);
    if (move.kind != MoveKind::Stay) {
      apply_move(s, move);
      Cost cost_p = eval.eval(s);
      if (accept_delta(cost_delta(cost_s, cost_p, params), temperature, rng)) {
        cost_s = cost_p;
        mask = s.mask();
      } else {
        undo_move(s, move);
      }
    }
    if (t >= burn_in) ++counts[mask];
  }
  for (size_t i = 0; i < m; ++i) freq[i] = static_cast<double>(counts[i]) / steps;
  return freq;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("total_variation: size mismatch");
  double sum = 0.0;
  for (size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

TpmDiagnostics check_tpm(const SControlInstance& inst, double temperature,
                         const CostParams& params, int max_n) {
  const size_t m = checked_state_count(inst, max_n, "check_tpm");
  const std::vector<double> tpm = build_exact_tpm(inst, temperature, params, max_n);
  const std::vector<double> gibbs = gibbs_distribution(inst, temperature, params);

  TpmDiagnostics diag;
  for (size_t r = 0; r < m; ++r) {
    double row_sum = 0.0;
    for (size_t c = 0; c < m; ++c) row_sum += tpm[r * m + c];
    diag.max_row_sum_deviation = std::max(diag.max_row_sum_deviation, std::abs(row_sum - 1.0));
  }
  for (size_t r = 0; r < m; ++r) {
    for (size_t c = r + 1; c < m; ++c) {
      double flow = gibbs[r] * tpm[r * m + c] - gibbs[c] * tpm[c * m + r];
      diag.max_detailed_balance_violation =
          std::max(diag.max_detailed_balance_violation, std::abs(flow));
    }
  }
  std::vector<double> pi = stationary_distribution(tpm, static_cast<int>(m));
  diag.tv_stationary_vs_gibbs = total_variation(pi, gibbs);
  return diag;
}

}  // namespace zfc
