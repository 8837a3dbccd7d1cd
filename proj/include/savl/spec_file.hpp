#pragma once

// Experiment spec files are JSON documents:
//
//   {
//     "format": "savl-experiment/1",
//     "name": "ablation",
//     "trials": 30,
//     "seed": 42,
//     "output_dir": "results/ablation",
//     "reference": "LDIW-StateBased",            (optional)
//     "trace_points": 500,                       (optional)
//     "problems": [ {"name": "f2", "dimension": 10,
//                    "population": 5,            (optional override)
//                    "rotation_seed": 7} ],      (optional, f6/f7)
//     "algorithms": [ {"label": "LDIW-StateBased",
//                      "population": 10, "max_iters": 3000,
//                      "inertia_start": 0.9, "inertia_end": 0.4,
//                      "c1": 2.05, "c2": 2.05,
//                      "limit_handling": "state-coupled" | "clamp",
//                      "vl": {"kind": "state-based" | "fixed" | "iteration-linear",
//                             "mu_min": 0.4, "mu_max": 0.7, "mu_fixed": 0.5}} ]
//   }
//
// Omitted algorithm fields take the RunConfig defaults.

#include <filesystem>
#include <string>
#include <string_view>

#include "savl/experiment.hpp"

namespace savl {

inline constexpr std::string_view kSpecFormat = "savl-experiment/1";

std::string spec_to_json(const ExperimentSpec& spec);
/// Throws ConfigError on schema violations (the message names the field).
ExperimentSpec spec_from_json(std::string_view text);

ExperimentSpec load_experiment_spec(const std::filesystem::path& path);
void save_experiment_spec(const ExperimentSpec& spec, const std::filesystem::path& path);

/// FNV-1a 64 of the canonical JSON, as 16 hex digits.
std::string spec_hash(const ExperimentSpec& spec);

}  // namespace savl
