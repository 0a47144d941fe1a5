#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zfc/exact.hpp"
#include "zfc/mcmc.hpp"

namespace zfc {

enum class Family { Er, Tree, File };
enum class SolverChoice { Mcmc, Exact, Both };

struct ExperimentSpec {
  Family family = Family::Er;
  std::vector<int> sizes;
  int instances_per_size = 100;
  double delta = 0.5;  // ER edge-probability parameter
  uint64_t base_seed = 0;
  SolverChoice solver = SolverChoice::Both;
  AnnealConfig anneal;       // seed field is ignored; per-instance seeds are derived
  int exact_max_n = 20;      // exact column is skipped for larger n
  std::string file_path;     // family == File
  int threads = 0;           // 0 = hardware concurrency

  void validate() const;
};

struct InstanceDetail {
  int n = 0;
  int instance_index = 0;
  uint64_t seed = 0;
  std::optional<int> mcmc_cardinality;
  bool feasible = false;
  std::optional<int> exact_optimum;
  double wall_time_seconds = 0;
};

struct SizeRow {
  int n = 0;
  std::optional<double> mean_mcmc_cardinality;
  std::optional<double> mean_exact_optimum;
  double mean_wall_time_seconds = 0;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<SizeRow> rows;
  std::vector<InstanceDetail> details;
};

// Seed for one instance; stable across serial and parallel execution.
uint64_t derive_instance_seed(uint64_t base_seed, Family family, int n, int instance_index);

// Runs family x sizes x instances, dispatching instances to a worker pool.
// Results are merged by index, so the report is deterministic for a given
// spec regardless of thread count.
ExperimentReport run_experiment(const ExperimentSpec& spec);

// Builds the instance a detail record refers to (for reproducing a run).
SControlInstance build_instance(const ExperimentSpec& spec, int n, int instance_index);

// Reads a pattern-matrix or edge-list file, sniffing the format: a line of
// '0'/'x' characters means a pattern matrix, anything else an edge list.
SControlInstance load_instance_file(const std::string& path, int* duplicates_collapsed = nullptr);

const char* family_name(Family f);
const char* solver_name(SolverChoice s);

}  // namespace zfc
