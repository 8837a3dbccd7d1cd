#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "savl/engine.hpp"
#include "savl/run_config.hpp"
#include "savl/stats.hpp"

namespace savl {

inline constexpr std::string_view kToolVersion = "savl 1.0.0";

struct ProblemSpec {
    std::string name;  ///< f1..f7 or a long name
    std::size_t dimension = 10;
    /// Overrides the algorithm's population for this problem (scalability runs).
    std::optional<std::size_t> population;
    std::optional<std::uint64_t> rotation_seed;
};

struct AlgorithmSpec {
    std::string label;
    RunConfig config;  ///< dimension and seed are filled in per cell
};

struct ExperimentSpec {
    std::string name;
    std::vector<ProblemSpec> problems;
    std::vector<AlgorithmSpec> algorithms;
    std::size_t n_trials = 30;
    std::uint64_t master_seed = 42;
    std::filesystem::path output_dir = "results";
    /// Label that every other algorithm is t-tested against; empty means the first.
    std::string reference;
    std::size_t trace_points = 500;

    /// Throws ConfigError naming the offending entry.
    void validate() const;
    const std::string& reference_label() const;
};

/// Downsampled convergence trace; iteration is 1-based (state after that iteration).
struct Trace {
    std::vector<std::size_t> iteration;
    std::vector<std::uint64_t> fe_count;
    std::vector<double> best_value;
    std::vector<double> f;
    std::vector<double> mu;
};

/// Keeps at most `max_points` entries with a uniform stride; the final
/// iteration is always present.
Trace downsample_trace(const TrialRecord& record, std::size_t population, std::size_t max_points);

struct CellResult {
    std::size_t algorithm_index = 0;
    std::size_t problem_index = 0;
    std::string algorithm;
    std::string problem;
    std::size_t dimension = 0;
    std::size_t population = 0;
    std::uint64_t cell_seed = 0;
    std::optional<std::uint64_t> rotation_seed;
    double acceptance = 0.0;
    /// Histories are dropped once the trace is taken.
    std::vector<TrialRecord> trials;
    std::vector<Trace> traces;
    AggregateStats stats;
};

struct TTestRow {
    std::string reference;
    std::string algorithm;
    std::string problem;
    TTestResult result;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<CellResult> cells;  ///< sorted by (algorithm index, problem index)
    std::vector<TTestRow> ttests;
    std::string spec_hash;
    std::string simd_backend;

    const CellResult* find(std::string_view algorithm, std::string_view problem) const noexcept;
};

struct ExecutionOptions {
    std::size_t threads = 1;
    bool write_files = true;
    TrialOptions trial_options;
    std::function<void(std::size_t done, std::size_t total)> progress;
};

/// mix_seed(mix_seed(master, algorithm_index), problem_index); trial t of the
/// cell then uses derive_trial_stream(cell_seed, t).
std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t algorithm_index,
                        std::size_t problem_index) noexcept;

/// The exact RunConfig used by a cell.
RunConfig resolve_config(const ExperimentSpec& spec, std::size_t algorithm_index,
                         std::size_t problem_index);

/// Runs every (algorithm, problem, trial), aggregates, t-tests against the
/// reference and, unless disabled, writes the report files to spec.output_dir.
/// Results do not depend on the thread count.
ExperimentReport run_experiment(const ExperimentSpec& spec, const ExecutionOptions& options = {});

}  // namespace savl
