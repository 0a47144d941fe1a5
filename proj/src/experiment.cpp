#include "zfc/experiment.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

#include "zfc/edge_list_io.hpp"
#include "zfc/generators.hpp"

namespace zfc {

void ExperimentSpec::validate() const {
  if (sizes.empty() && family != Family::File) {
    throw std::invalid_argument("ExperimentSpec: sizes must be non-empty");
  }
  if (instances_per_size < 1) {
    throw std::invalid_argument("ExperimentSpec: instances_per_size must be >= 1");
  }
  if (family == Family::Er && delta <= 0) {
    throw std::invalid_argument("ExperimentSpec: delta must be > 0");
  }
  if (family == Family::File && file_path.empty()) {
    throw std::invalid_argument("ExperimentSpec: file family requires file_path");
  }
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Er: return "er";
    case Family::Tree: return "tree";
    case Family::File: return "file";
  }
  return "?";
}

const char* solver_name(SolverChoice s) {
  switch (s) {
    case SolverChoice::Mcmc: return "mcmc";
    case SolverChoice::Exact: return "exact";
    case SolverChoice::Both: return "both";
  }
  return "?";
}

uint64_t derive_instance_seed(uint64_t base_seed, Family family, int n, int instance_index) {
  return mix_seed({base_seed, static_cast<uint64_t>(family), static_cast<uint64_t>(n),
                   static_cast<uint64_t>(instance_index)});
}

SControlInstance build_instance(const ExperimentSpec& spec, int n, int instance_index) {
  uint64_t seed = derive_instance_seed(spec.base_seed, spec.family, n, instance_index);
  switch (spec.family) {
    case Family::Er:
      return SControlInstance::from_pattern(gen_erdos_renyi(n, spec.delta, seed));
    case Family::Tree:
      return SControlInstance::from_pattern(gen_selfdamped_tree(n, seed));
    case Family::File:
      return load_instance_file(spec.file_path);
  }
  throw std::logic_error("build_instance: unknown family");
}

SControlInstance load_instance_file(const std::string& path, int* duplicates_collapsed) {
  std::ifstream probe(path);
  if (!probe) throw ParseError("cannot open file: " + path);
  std::string line;
  bool is_matrix = false;
  while (std::getline(probe, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    is_matrix = line.find_first_not_of("0xX") == std::string::npos;
    break;
  }
  if (duplicates_collapsed) *duplicates_collapsed = 0;
  if (is_matrix) {
    return SControlInstance::from_pattern(read_pattern(path));
  }
  return SControlInstance::from_graph(read_edge_list(path, std::nullopt, duplicates_collapsed));
}

namespace {

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  }
  for (auto& w : pool) w.join();
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  spec.validate();

  std::vector<int> sizes = spec.sizes;
  if (spec.family == Family::File && sizes.empty()) sizes.push_back(0);  // n read from file

  struct Task {
    int size_index;
    int n;
    int instance_index;
  };
  std::vector<Task> tasks;
  for (int si = 0; si < static_cast<int>(sizes.size()); ++si) {
    for (int k = 0; k < spec.instances_per_size; ++k) {
      tasks.push_back({si, sizes[si], k});
    }
  }

  ExperimentReport report;
  report.spec = spec;
  report.details.resize(tasks.size());

  const bool run_mcmc = spec.solver != SolverChoice::Exact;
  const bool run_exact = spec.solver != SolverChoice::Mcmc;

  parallel_for(static_cast<int>(tasks.size()), spec.threads, [&](int ti) {
    const Task& task = tasks[ti];
    auto start = std::chrono::steady_clock::now();
    SControlInstance inst = build_instance(spec, task.n, task.instance_index);
    InstanceDetail detail;
    detail.n = inst.dim();
    detail.instance_index = task.instance_index;
    detail.seed = derive_instance_seed(spec.base_seed, spec.family, task.n, task.instance_index);
    if (run_mcmc) {
      AnnealConfig config = spec.anneal;
      config.seed = detail.seed;
      RunReport rr = run(inst, config);
      detail.mcmc_cardinality = rr.output_cardinality;
      detail.feasible = rr.feasible;
    }
    if (run_exact && inst.dim() <= spec.exact_max_n) {
      detail.exact_optimum = solve_exact(inst, spec.exact_max_n).optimum;
    }
    detail.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.details[ti] = detail;
  });

  for (int si = 0; si < static_cast<int>(sizes.size()); ++si) {
    SizeRow row;
    double sum_mcmc = 0, sum_exact = 0, sum_time = 0;
    int count = 0, exact_count = 0, mcmc_count = 0;
    for (int k = 0; k < spec.instances_per_size; ++k) {
      const InstanceDetail& d = report.details[si * spec.instances_per_size + k];
      row.n = d.n;
      ++count;
      sum_time += d.wall_time_seconds;
      if (d.mcmc_cardinality) {
        sum_mcmc += *d.mcmc_cardinality;
        ++mcmc_count;
      }
      if (d.exact_optimum) {
        sum_exact += *d.exact_optimum;
        ++exact_count;
      }
    }
    if (count > 0) row.mean_wall_time_seconds = sum_time / count;
    if (mcmc_count == count && count > 0) row.mean_mcmc_cardinality = sum_mcmc / count;
    if (exact_count == count && count > 0) row.mean_exact_optimum = sum_exact / count;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace zfc
