#include "savl/presets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace savl {
namespace {

RunConfig ldiw_base(std::size_t population, std::size_t max_iters) {
    RunConfig config;
    config.population = population;
    config.max_iters = max_iters;
    config.inertia_start = 0.9;
    config.inertia_end = 0.4;
    config.c1 = 2.05;
    config.c2 = 2.05;
    return config;
}

std::string mu_label(const char* name, double value) {
    char text[32];
    std::snprintf(text, sizeof text, "%s=%.2g", name, value);
    return text;
}

std::vector<ProblemSpec> problems_at(std::initializer_list<const char*> names,
                                     std::size_t dimension) {
    std::vector<ProblemSpec> out;
    for (const char* name : names) out.push_back({name, dimension, std::nullopt, std::nullopt});
    return out;
}

}  // namespace

AlgorithmSpec pso_savl(double mu_min, double mu_max) {
    RunConfig config = ldiw_base(20, 10000);
    config.vl_strategy = VlStrategyConfig::state_based(mu_min, mu_max);
    config.limit_handling = LimitHandling::StateCoupled;
    return {"PSO-SAVL", config};
}

AlgorithmSpec pso_ldiw(double mu_fixed) {
    RunConfig config = ldiw_base(20, 10000);
    config.vl_strategy = VlStrategyConfig::fixed(mu_fixed);
    config.limit_handling = LimitHandling::Clamp;
    return {"PSO-LDIW", config};
}

ExperimentSpec preset_ablation() {
    ExperimentSpec spec;
    spec.name = "ablation";
    spec.problems = problems_at({"f2", "f3", "f5", "f6"}, 10);
    const RunConfig base = ldiw_base(10, 3000);
    const struct {
        const char* label;
        VlStrategyConfig vl;
    } variants[] = {
        {"LDIW-Fixed", VlStrategyConfig::fixed()},
        {"LDIW-IterationLinear", VlStrategyConfig::iteration_linear(0.4, 0.7)},
        {"LDIW-StateBased", VlStrategyConfig::state_based(0.4, 0.7)},
    };
    for (const auto& variant : variants) {
        RunConfig config = base;
        config.vl_strategy = variant.vl;
        config.limit_handling = LimitHandling::Clamp;
        spec.algorithms.push_back({variant.label, config});
    }
    spec.n_trials = 30;
    spec.reference = "LDIW-StateBased";
    spec.output_dir = "results/ablation";
    return spec;
}

ExperimentSpec preset_main_comparison() {
    ExperimentSpec spec;
    spec.name = "compare";
    spec.problems = problems_at({"f1", "f2", "f3", "f4", "f5", "f6", "f7"}, 50);
    spec.algorithms = {pso_savl(), pso_ldiw()};
    spec.n_trials = 30;
    spec.reference = "PSO-SAVL";
    spec.output_dir = "results/compare";
    return spec;
}

ExperimentSpec preset_sensitivity(SensitivityParam which, const std::vector<double>& grid) {
    ExperimentSpec spec = preset_main_comparison();
    spec.algorithms.clear();
    const bool mu_max_sweep = which == SensitivityParam::MuMax;
    spec.name = mu_max_sweep ? "sensitivity-mu-max" : "sensitivity-mu-min";
    spec.output_dir = "results/" + spec.name;
    std::vector<double> values = grid;
    if (values.empty()) {
        values = mu_max_sweep ? std::vector<double>{1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4}
                              : std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
    }
    for (double value : values) {
        const double mu_min = mu_max_sweep ? 0.4 : value;
        const double mu_max = mu_max_sweep ? value : 0.7;
        if (!(mu_min > 0.0 && mu_min < 1.0 && mu_max > 0.0 && mu_max <= 1.0) || mu_min > mu_max) {
            continue;
        }
        AlgorithmSpec algorithm = pso_savl(mu_min, mu_max);
        algorithm.label = mu_max_sweep ? mu_label("mu_max", value) : mu_label("mu_min", value);
        spec.algorithms.push_back(algorithm);
    }
    spec.reference.clear();
    for (const auto& algorithm : spec.algorithms) {
        if (algorithm.config.vl_strategy.mu_min == 0.4 && algorithm.config.vl_strategy.mu_max == 0.7) {
            spec.reference = algorithm.label;
        }
    }
    return spec;
}

ExperimentSpec preset_scalability(std::size_t max_iters) {
    ExperimentSpec spec;
    spec.name = "scalability";
    for (std::size_t dim : {50, 100, 200}) {
        for (const char* name : {"f2", "f6", "f7"}) {
            spec.problems.push_back({name, dim, dim / 2, std::nullopt});
        }
    }
    spec.algorithms = {pso_savl(), pso_ldiw()};
    for (auto& algorithm : spec.algorithms) algorithm.config.max_iters = max_iters;
    spec.n_trials = 30;
    spec.reference = "PSO-SAVL";
    spec.output_dir = "results/scalability";
    return spec;
}

void apply_overrides(ExperimentSpec& spec, const SpecOverrides& overrides) {
    if (overrides.problems) {
        std::vector<ProblemSpec> selected;
        for (const auto& name : *overrides.problems) {
            bool found = false;
            for (const auto& problem : spec.problems) {
                if (problem.name == name) {
                    selected.push_back(problem);
                    found = true;
                }
            }
            if (!found) {
                const std::size_t dim = spec.problems.empty() ? 10 : spec.problems.front().dimension;
                selected.push_back({name, dim, std::nullopt, std::nullopt});
            }
        }
        spec.problems = std::move(selected);
    }
    if (overrides.dimension) {
        for (auto& problem : spec.problems) problem.dimension = *overrides.dimension;
    }
    if (overrides.max_iters) {
        for (auto& algorithm : spec.algorithms) algorithm.config.max_iters = *overrides.max_iters;
    }
    if (overrides.trials) spec.n_trials = *overrides.trials;
    if (overrides.budget_scale) {
        const double scale = *overrides.budget_scale;
        if (!(scale > 0.0)) throw ConfigError("budget scale must be positive");
        for (auto& algorithm : spec.algorithms) {
            const auto scaled = std::llround(static_cast<double>(algorithm.config.max_iters) * scale);
            algorithm.config.max_iters = static_cast<std::size_t>(std::max<long long>(1, scaled));
        }
        const auto trials = std::llround(static_cast<double>(spec.n_trials) * scale);
        spec.n_trials = static_cast<std::size_t>(std::max<long long>(2, trials));
    }
    if (overrides.seed) spec.master_seed = *overrides.seed;
    if (overrides.output_dir) spec.output_dir = *overrides.output_dir;
}

}  // namespace savl
