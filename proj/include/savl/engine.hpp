#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "savl/benchmarks.hpp"
#include "savl/core.hpp"
#include "savl/run_config.hpp"
#include "savl/vl_strategy.hpp"

namespace savl {

struct SwarmState {
    Matrix positions;
    Matrix velocities;
    Matrix pbest_positions;
    std::vector<double> pbest_values;
    std::vector<double> gbest_position;
    double gbest_value = 0.0;
    std::size_t gbest_index = 0;
    std::size_t iteration = 0;
    std::uint64_t fe_count = 0;
    /// Instrumentation: pairwise distances evaluated by state estimation so far.
    std::uint64_t pair_distance_evals = 0;
};

struct StepResult {
    double f = 0.0;
    double mu = 0.0;
    VelocityLimit vl;
};

struct TrialRecord {
    std::vector<double> best_value_history;
    std::vector<double> f_history;
    std::vector<double> mu_history;
    std::vector<double> best_position;
    double final_value = 0.0;
    std::optional<std::uint64_t> fe_at_acceptance;
    std::uint64_t total_fes = 0;
    double wall_time_seconds = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t trial_index = 0;
    std::uint64_t pair_distance_evals = 0;
    std::uint64_t containment_checks = 0;
    std::uint64_t containment_violations = 0;
};

struct TrialOptions {
    /// Check containment after every `containment_stride`-th iteration (and the
    /// last one); 0 disables. The default is 1 in debug builds and 100 otherwise.
    std::size_t containment_stride = default_containment_stride();

    static std::size_t default_containment_stride() noexcept;
};

/// Positions uniform in the bounds, velocities uniform in [-VL, VL] for the
/// strategy's widest limit (f = 1, k = 0). Draw order per particle: its D
/// position coordinates, then its D velocity coordinates.
SwarmState initialize_swarm(const RunConfig& config, const BenchmarkProblem& problem,
                            RngStream& rng);

/// Velocity update with explicit random coefficients, in place.
void update_velocity(std::span<double> v, std::span<const double> x, std::span<const double> pbest,
                     std::span<const double> gbest, double omega, double c1, double c2,
                     std::span<const double> r1, std::span<const double> r2);

/// Draws r1, r2 per dimension (r1 first) and applies the update.
std::vector<double> update_velocity(std::span<const double> v, std::span<const double> x,
                                    std::span<const double> pbest, std::span<const double> gbest,
                                    double omega, double c1, double c2, RngStream& rng);

/// One synchronous iteration: state estimation, velocity limit, per-particle
/// move/repair/evaluate/pbest, then the gbest refresh.
StepResult step(SwarmState& state, const RunConfig& config, const BenchmarkProblem& problem,
                RngStream& rng);

/// True when every position is inside the bounds and every |v| <= VL.
bool within_limits(const SwarmState& state, const Bounds& bounds, const VelocityLimit& vl) noexcept;

/// Full run with the stream derive_trial_stream(config.seed, trial_index).
/// total_fes = N * (max_iters + 1), counting the initial evaluations.
TrialRecord run_trial(const RunConfig& config, const BenchmarkProblem& problem,
                      std::uint64_t trial_index, const TrialOptions& options = {});

}  // namespace savl
