#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "savl/experiment.hpp"

namespace savl {

/// Standard algorithm configurations.
AlgorithmSpec pso_savl(double mu_min = 0.4, double mu_max = 0.7);
/// Linearly decreasing inertia with a fixed velocity limit and nearest-limit clamping.
AlgorithmSpec pso_ldiw(double mu_fixed = VlStrategyConfig::kDefaultMuFixed);

/// Fixed vs iteration-linear vs state-based velocity limits on a PSO-LDIW base:
/// f2, f3, f5, f6 at D = 10, N = 10, 3000 iterations, 30 trials.
ExperimentSpec preset_ablation();

/// PSO-SAVL vs PSO-LDIW on f1..f7 at D = 50, N = 20, 10000 iterations, 30 trials.
ExperimentSpec preset_main_comparison();

enum class SensitivityParam { MuMax, MuMin };

/// MuMax: mu_min = 0.4, mu_max in {0.4, ..., 1.0}. MuMin: mu_max = 0.7,
/// mu_min in {0.1, ..., 0.7}. Main-comparison budget. A custom grid replaces
/// the default one; pairs with mu_min > mu_max are dropped.
ExperimentSpec preset_sensitivity(SensitivityParam which,
                                  const std::vector<double>& grid = {});

/// PSO-SAVL vs PSO-LDIW on f2, f6, f7 at D in {50, 100, 200} with N = D/2.
ExperimentSpec preset_scalability(std::size_t max_iters = 2000);

struct SpecOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> max_iters;
    std::optional<std::size_t> dimension;
    std::optional<std::vector<std::string>> problems;
    std::optional<double> budget_scale;
    std::optional<std::string> output_dir;
};

/// Applies overrides in a fixed order: problems, dimension, max_iters, trials,
/// budget scale, seed, output directory. The budget scale multiplies max_iters
/// (at least 1) and n_trials (at least 2).
void apply_overrides(ExperimentSpec& spec, const SpecOverrides& overrides);

}  // namespace savl
