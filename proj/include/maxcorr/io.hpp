#pragma once

#include <string>

#include <json.hpp>

#include "maxcorr/channels.hpp"
#include "maxcorr/classical.hpp"
#include "maxcorr/harness.hpp"
#include "maxcorr/states.hpp"

namespace maxcorr {

// Matrix wire format: row-major nested lists of [re, im] pairs.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// {"dim_a": int, "dim_b": int, "matrix": [...], "tol": optional double}
nlohmann::json state_to_json(const BipartiteState& rho);
BipartiteState state_from_json(const nlohmann::json& j);

// {"dim_in": int, "dim_out": int, "kraus": [matrix, ...]}
nlohmann::json channel_to_json(const QuantumChannel& channel);
QuantumChannel channel_from_json(const nlohmann::json& j);

// CSV: one row per A symbol, comma-separated decimal probabilities.
JointDistribution distribution_from_csv(const std::string& text);
std::string distribution_to_csv(const JointDistribution& dist);

nlohmann::json report_to_json(const SuiteReport& report);

// File helpers; parse failures surface as std::runtime_error with the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
BipartiteState load_state(const std::string& path);
QuantumChannel load_channel(const std::string& path);
JointDistribution load_distribution(const std::string& path);

}  // namespace maxcorr
