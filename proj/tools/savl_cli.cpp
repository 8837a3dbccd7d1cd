// savl: run velocity-limit PSO experiments and write CSV reports.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "savl/experiment.hpp"
#include "savl/presets.hpp"
#include "savl/simd/kernels.hpp"
#include "savl/spec_file.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<double> budget_scale;
    std::optional<std::string> out;
    std::optional<std::size_t> iters;
    std::optional<std::size_t> dim;
    std::vector<std::string> problems;
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    std::size_t containment_stride = savl::TrialOptions::default_containment_stride();
    std::string emit_spec;
    std::string simd;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--seed", flags.seed, "Master seed");
    cmd->add_option("--trials", flags.trials, "Trials per (algorithm, problem)");
    cmd->add_option("--budget-scale", flags.budget_scale,
                    "Multiply max_iters and trials by this factor");
    cmd->add_option("--out", flags.out, "Output directory");
    cmd->add_option("--threads", flags.threads, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--iters", flags.iters, "Override max_iters");
    cmd->add_option("--dim", flags.dim, "Override problem dimension");
    cmd->add_option("--problems", flags.problems, "Restrict to these problems (f1..f7)")
        ->delimiter(',');
    cmd->add_option("--containment-stride", flags.containment_stride,
                    "Check position/velocity containment every N iterations (0 = off)");
    cmd->add_option("--emit-spec", flags.emit_spec,
                    "Write the resolved experiment spec to this file and exit");
    cmd->add_option("--simd", flags.simd, "Kernel backend: scalar, avx2, neon");
    cmd->add_flag("--quiet", flags.quiet, "No progress output");
}

int execute(savl::ExperimentSpec spec, const CommonFlags& flags) {
    savl::SpecOverrides overrides;
    overrides.seed = flags.seed;
    overrides.trials = flags.trials;
    overrides.budget_scale = flags.budget_scale;
    overrides.output_dir = flags.out;
    overrides.max_iters = flags.iters;
    overrides.dimension = flags.dim;
    if (!flags.problems.empty()) overrides.problems = flags.problems;
    savl::apply_overrides(spec, overrides);
    spec.validate();

    if (!flags.simd.empty()) {
        const std::string& name = flags.simd;
        const auto backend = name == "scalar" ? savl::simd::Backend::Scalar
                             : name == "avx2" ? savl::simd::Backend::Avx2
                             : name == "neon" ? savl::simd::Backend::Neon
                                              : throw savl::ConfigError("unknown SIMD backend '" + name + "'");
        try {
            savl::simd::set_backend(backend);
        } catch (const std::invalid_argument& e) {
            throw savl::ConfigError(e.what());
        }
    }

    if (!flags.emit_spec.empty()) {
        savl::save_experiment_spec(spec, flags.emit_spec);
        return 0;
    }

    savl::ExecutionOptions options;
    options.threads = flags.threads;
    options.trial_options.containment_stride = flags.containment_stride;
    if (!flags.quiet) {
        options.progress = [](std::size_t done, std::size_t total) {
            if (done == total || done % 10 == 0) {
                std::fprintf(stderr, "\r%zu/%zu trials", done, total);
                if (done == total) std::fputc('\n', stderr);
            }
        };
    }
    const auto report = savl::run_experiment(spec, options);

    std::uint64_t violations = 0;
    for (const auto& cell : report.cells) {
        for (const auto& trial : cell.trials) violations += trial.containment_violations;
    }
    std::printf("%-24s %-6s %14s %14s %8s %12s\n", "algorithm", "problem", "mean", "std",
                "success", "exp_fes");
    for (const auto& cell : report.cells) {
        const auto& s = cell.stats;
        std::printf("%-24s %-6s %14.6g %14.6g %7.1f%% %12s\n", cell.algorithm.c_str(),
                    cell.problem.c_str(), s.mean, s.std, 100.0 * s.success_ratio,
                    s.expected_fes ? std::to_string(static_cast<long long>(*s.expected_fes)).c_str()
                                   : "-");
    }
    std::printf("containment violations: %llu\n", static_cast<unsigned long long>(violations));
    std::printf("report written to %s\n", spec.output_dir.string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Particle swarm optimization with state-based adaptive velocity limits"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string spec_file;
    std::string sensitivity_param;

    auto* run = app.add_subcommand("run", "Run an experiment from a spec file");
    run->add_option("spec-file", spec_file, "Experiment spec (JSON)")->required();
    add_common(run, flags);

    auto* ablation = app.add_subcommand("ablation", "Velocity-limit strategy ablation");
    add_common(ablation, flags);

    auto* compare = app.add_subcommand("compare", "PSO-SAVL vs PSO-LDIW on f1..f7, D = 50");
    add_common(compare, flags);

    std::vector<double> grid;
    auto* sensitivity = app.add_subcommand("sensitivity", "mu_max / mu_min sensitivity sweep");
    sensitivity->add_option("--param", sensitivity_param, "mu-max or mu-min")
        ->required()
        ->check(CLI::IsMember({"mu-max", "mu-min"}));
    sensitivity->add_option("--grid", grid, "Comma-separated values to sweep")->delimiter(',');
    add_common(sensitivity, flags);

    auto* scalability = app.add_subcommand("scalability", "f2, f6, f7 at D = 50, 100, 200");
    add_common(scalability, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (run->parsed()) return execute(savl::load_experiment_spec(spec_file), flags);
        if (ablation->parsed()) return execute(savl::preset_ablation(), flags);
        if (compare->parsed()) return execute(savl::preset_main_comparison(), flags);
        if (sensitivity->parsed()) {
            const auto which = sensitivity_param == "mu-max" ? savl::SensitivityParam::MuMax
                                                             : savl::SensitivityParam::MuMin;
            return execute(savl::preset_sensitivity(which, grid), flags);
        }
        if (scalability->parsed()) return execute(savl::preset_scalability(), flags);
    } catch (const savl::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const savl::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const savl::DomainError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }
    return 0;
}
