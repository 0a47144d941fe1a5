#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zfc/rng.hpp"
#include "zfc/scontrol.hpp"

namespace zfc {

enum class OutputMode {
  // Report the chain state at the stopping time, feasible or not.
  Faithful,
  // Report the lowest-cardinality feasible set observed anywhere along the
  // chain, falling back to repair(final state) when none was seen.
  BestFeasible,
};

struct AnnealConfig {
  double t0 = 1.5;
  double alpha = 0.95;
  double t_stop = 0.001;
  long long epoch_len = 1000;  // iterations between temperature updates
  double epsilon = 0.1;        // cost-function parameter
  uint64_t seed = 0;
  OutputMode mode = OutputMode::BestFeasible;
  int n_chains = 1;

  void validate() const;
};

enum class MoveKind { Add, Remove, Swap, Stay };

struct Proposal {
  MoveKind kind = MoveKind::Stay;
  int added = -1;
  int removed = -1;
};

// One proposal draw: the move class is Add / Remove / Swap with probabilities
// 2(n-|S|)/(3n), 2|S|/(3n), 1/3; the vertex (or pair) within the class is
// uniform. A Swap drawn at S = empty or S = V degenerates to Stay.
Proposal propose_move(const VertexSet& s, SplitMix64& rng);

// Set-returning form of the proposal.
VertexSet propose(const VertexSet& s, SplitMix64& rng, MoveKind* kind = nullptr);

void apply_move(VertexSet& s, const Proposal& p);
void undo_move(VertexSet& s, const Proposal& p);

// Metropolis rule: accept with probability min{exp((cost_s - cost_proposed)/t), 1}.
// Consumes one uniform draw only for strictly uphill proposals.
bool accept_delta(double delta, double t, SplitMix64& rng);
bool accept(double cost_s, double cost_proposed, double t, SplitMix64& rng);

struct ChainState {
  VertexSet s;
  Cost cost_s;
  long long iteration = 0;
  double temperature = 0;
  std::optional<VertexSet> best_feasible;
};

struct RunReport {
  VertexSet output_set;
  int output_cardinality = 0;
  bool feasible = false;
  VertexSet final_set;
  long long iterations = 0;
  std::vector<std::pair<long long, double>> cost_trace;  // sampled per epoch
  uint64_t seed = 0;
  std::string rng_algorithm = SplitMix64::kAlgorithm;
  AnnealConfig config;
  int chains_run = 1;
  double wall_time_seconds = 0;
};

// Simulated-annealing search: start from the empty set, run the Metropolis
// chain while t_stop <= T, cooling by alpha every epoch_len iterations.
// Deterministic given (instance, config) apart from wall_time_seconds. With
// n_chains > 1, independent chains run in parallel on derived seeds and the
// best output is reported.
RunReport run(const SControlInstance& inst, const AnnealConfig& config);

// --- fixed-temperature diagnostics (small n only) ---

// Row-major 2^n x 2^n one-step transition matrix of the fixed-temperature
// chain; state index = subset bitmask. Throws std::length_error when
// inst.dim() > max_n.
std::vector<double> build_exact_tpm(const SControlInstance& inst, double temperature,
                                    const CostParams& params, int max_n = 10);

// Boltzmann weights exp(-C(S)/T), normalized; indexed by subset bitmask.
std::vector<double> gibbs_distribution(const SControlInstance& inst, double temperature,
                                       const CostParams& params);

// Left fixed point of the transition matrix (pi P = pi, sum pi = 1), by
// dense Gaussian elimination.
std::vector<double> stationary_distribution(const std::vector<double>& tpm, int num_states);

// State-visit frequencies of the fixed-temperature chain after burn_in
// iterations; indexed by subset bitmask. All-zero when steps == 0.
std::vector<double> empirical_distribution(const SControlInstance& inst, double temperature,
                                           long long steps, long long burn_in, uint64_t seed,
                                           const CostParams& params = {});

double total_variation(const std::vector<double>& p, const std::vector<double>& q);

struct TpmDiagnostics {
  double max_row_sum_deviation = 0;
  double max_detailed_balance_violation = 0;
  double tv_stationary_vs_gibbs = 0;
};

TpmDiagnostics check_tpm(const SControlInstance& inst, double temperature,
                         const CostParams& params, int max_n = 10);

}  // namespace zfc
