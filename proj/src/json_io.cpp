#include "zfc/json_io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace zfc {

namespace {

const char* mode_name(OutputMode mode) {
  return mode == OutputMode::Faithful ? "faithful" : "best_feasible";
}

OutputMode mode_from_name(const std::string& name) {
  if (name == "faithful") return OutputMode::Faithful;
  if (name == "best_feasible") return OutputMode::BestFeasible;
  throw std::invalid_argument("unknown mode: " + name);
}

Family family_from_name(const std::string& name) {
  if (name == "er") return Family::Er;
  if (name == "tree") return Family::Tree;
  if (name == "file") return Family::File;
  throw std::invalid_argument("unknown family: " + name);
}

SolverChoice solver_from_name(const std::string& name) {
  if (name == "mcmc") return SolverChoice::Mcmc;
  if (name == "exact") return SolverChoice::Exact;
  if (name == "both") return SolverChoice::Both;
  throw std::invalid_argument("unknown solver: " + name);
}

}  // namespace

nlohmann::json to_json(const VertexSet& s) {
  return nlohmann::json(s.sorted_members());
}

nlohmann::json to_json(const AnnealConfig& config) {
  return {
      {"t0", config.t0},
      {"alpha", config.alpha},
      {"t_stop", config.t_stop},
      {"epoch_len", config.epoch_len},
      {"epsilon", config.epsilon},
      {"mode", mode_name(config.mode)},
      {"n_chains", config.n_chains},
  };
}

AnnealConfig anneal_config_from_json(const nlohmann::json& j) {
  AnnealConfig config;
  config.t0 = j.value("t0", config.t0);
  config.alpha = j.value("alpha", config.alpha);
  config.t_stop = j.value("t_stop", config.t_stop);
  config.epoch_len = j.value("epoch_len", config.epoch_len);
  config.epsilon = j.value("epsilon", config.epsilon);
  config.seed = j.value("seed", config.seed);
  config.n_chains = j.value("n_chains", config.n_chains);
  if (j.contains("mode")) config.mode = mode_from_name(j.at("mode").get<std::string>());
  return config;
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json trace = nlohmann::json::array();
  for (auto [iter, c] : report.cost_trace) trace.push_back({iter, c});
  return {
      {"schema", kJsonSchema},
      {"kind", "run_report"},
      {"n", report.output_set.universe_size()},
      {"seed", report.seed},
      {"rng", report.rng_algorithm},
      {"anneal", to_json(report.config)},
      {"chains", report.chains_run},
      {"output_set", to_json(report.output_set)},
      {"output_cardinality", report.output_cardinality},
      {"feasible", report.feasible},
      {"final_set", to_json(report.final_set)},
      {"iterations", report.iterations},
      {"cost_trace", trace},
      {"wall_time_seconds", report.wall_time_seconds},
  };
}

nlohmann::json to_json(const ExperimentSpec& spec) {
  nlohmann::json j = {
      {"family", family_name(spec.family)},
      {"sizes", spec.sizes},
      {"instances_per_size", spec.instances_per_size},
      {"base_seed", spec.base_seed},
      {"solver", solver_name(spec.solver)},
      {"anneal", to_json(spec.anneal)},
      {"exact_max_n", spec.exact_max_n},
      {"threads", spec.threads},
  };
  if (spec.family == Family::Er) j["delta"] = spec.delta;
  if (spec.family == Family::File) j["file_path"] = spec.file_path;
  return j;
}

ExperimentSpec experiment_spec_from_json(const nlohmann::json& j) {
  ExperimentSpec spec;
  spec.family = family_from_name(j.at("family").get<std::string>());
  if (j.contains("sizes")) spec.sizes = j.at("sizes").get<std::vector<int>>();
  spec.instances_per_size = j.value("instances_per_size", spec.instances_per_size);
  spec.delta = j.value("delta", spec.delta);
  spec.base_seed = j.value("base_seed", spec.base_seed);
  if (j.contains("solver")) spec.solver = solver_from_name(j.at("solver").get<std::string>());
  if (j.contains("anneal")) spec.anneal = anneal_config_from_json(j.at("anneal"));
  spec.exact_max_n = j.value("exact_max_n", spec.exact_max_n);
  spec.file_path = j.value("file_path", spec.file_path);
  spec.threads = j.value("threads", spec.threads);
  spec.validate();
  return spec;
}

ExperimentSpec read_experiment_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open experiment spec: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return experiment_spec_from_json(j);
}

nlohmann::json to_json(const ExperimentReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SizeRow& r : report.rows) {
    nlohmann::json row = {
        {"n", r.n},
        {"mean_wall_time_seconds", r.mean_wall_time_seconds},
    };
    row["mean_mcmc_cardinality"] =
        r.mean_mcmc_cardinality ? nlohmann::json(*r.mean_mcmc_cardinality) : nlohmann::json();
    row["mean_exact_optimum"] =
        r.mean_exact_optimum ? nlohmann::json(*r.mean_exact_optimum) : nlohmann::json();
    rows.push_back(row);
  }
  nlohmann::json details = nlohmann::json::array();
  for (const InstanceDetail& d : report.details) {
    nlohmann::json detail = {
        {"n", d.n},
        {"instance_index", d.instance_index},
        {"seed", d.seed},
        {"feasible", d.feasible},
        {"wall_time_seconds", d.wall_time_seconds},
    };
    detail["mcmc_cardinality"] =
        d.mcmc_cardinality ? nlohmann::json(*d.mcmc_cardinality) : nlohmann::json();
    detail["exact_optimum"] =
        d.exact_optimum ? nlohmann::json(*d.exact_optimum) : nlohmann::json();
    details.push_back(detail);
  }
  return {
      {"schema", kJsonSchema},
      {"kind", "experiment_report"},
      {"spec", to_json(report.spec)},
      {"rows", rows},
      {"details", details},
  };
}

std::string number_to_string(double value) {
  return nlohmann::json(value).dump();
}

void write_experiment_csv_rows(const ExperimentReport& report, std::ostream& out) {
  out << "n,mean_mcmc_cardinality,mean_exact_optimum,mean_wall_time_seconds\n";
  for (const SizeRow& r : report.rows) {
    out << r.n << ',';
    if (r.mean_mcmc_cardinality) out << number_to_string(*r.mean_mcmc_cardinality);
    out << ',';
    if (r.mean_exact_optimum) out << number_to_string(*r.mean_exact_optimum);
    out << ',' << number_to_string(r.mean_wall_time_seconds) << '\n';
  }
}

void write_experiment_csv_details(const ExperimentReport& report, std::ostream& out) {
  out << "n,instance_index,seed,mcmc_cardinality,feasible,exact_optimum,wall_time_seconds\n";
  for (const InstanceDetail& d : report.details) {
    out << d.n << ',' << d.instance_index << ',' << d.seed << ',';
    if (d.mcmc_cardinality) out << *d.mcmc_cardinality;
    out << ',' << (d.feasible ? "true" : "false") << ',';
    if (d.exact_optimum) out << *d.exact_optimum;
    out << ',' << number_to_string(d.wall_time_seconds) << '\n';
  }
}

}  // namespace zfc
