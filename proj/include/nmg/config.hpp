#pragma once

#include <string>

#include <json.hpp>

#include "nmg/experiments.hpp"

namespace nmg {

/// Nested JSON form of a run configuration:
///   {"mode", "params": {...}, "datum": {...}, "grid": {"n_nodes"},
///    "quadrature": {...}, "solve": {...}, "eta_sweep": [...], "output_dir", "seed"}
/// Keys missing from the input keep their current values; unknown keys are errors.
nlohmann::json to_json(const RunConfig& cfg);
void merge_json(RunConfig& cfg, const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Compact dump with sorted keys; the input of the content hash.
std::string canonical_config(const RunConfig& cfg);

}  // namespace nmg
