#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "zfc/experiment.hpp"
#include "zfc/mcmc.hpp"

namespace zfc {

// Version tag carried by every JSON artifact this tool writes.
inline constexpr const char* kJsonSchema = "zfc-opt/1";

// Machine output is 0-based; vertex sets serialize as sorted id arrays.
nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const AnnealConfig& config);
nlohmann::json to_json(const RunReport& report);
nlohmann::json to_json(const ExperimentSpec& spec);
nlohmann::json to_json(const ExperimentReport& report);

AnnealConfig anneal_config_from_json(const nlohmann::json& j);
ExperimentSpec experiment_spec_from_json(const nlohmann::json& j);
ExperimentSpec read_experiment_spec(const std::string& path);

// Shortest round-trip rendering, shared by the JSON and CSV writers so both
// renditions carry identical digits.
std::string number_to_string(double value);

void write_experiment_csv_rows(const ExperimentReport& report, std::ostream& out);
void write_experiment_csv_details(const ExperimentReport& report, std::ostream& out);

}  // namespace zfc
