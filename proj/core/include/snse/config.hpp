#pragma once

#include <cstdint>
#include <string>

#include "snse/experiments.hpp"

namespace snse {

/// Parse an experiment config from its JSON text.  Unknown keys throw, as do
/// values violating the solver contracts.  Every field is optional and
/// defaults to the acceptance-scale setup (d=2, N=64, T=1, dt=2^-10, g=0.5,
/// alpha=0.75, nu=1, multiplicative noise, shear initial field).
ExperimentConfig parse_experiment_config(const std::string& json_text);

/// Load a config file; throws std::runtime_error naming the path when it
/// cannot be read.
ExperimentConfig load_experiment_config(const std::string& path);

/// Canonical JSON dump of a fully resolved config (stable key order).
std::string dump_experiment_config(const ExperimentConfig& cfg);

/// FNV-1a hash of the canonical dump, printed as 16 hex digits.
std::string config_content_hash(const ExperimentConfig& cfg);

/// Write run-meta.json (resolved config + content hash + tool version).
void write_run_meta(const std::string& out_dir, const std::string& command,
                    const ExperimentConfig& cfg);

}  // namespace snse
