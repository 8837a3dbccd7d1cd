#include "savl/engine.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "savl/ese.hpp"
#include "savl/limit_handling.hpp"
#include "savl/simd/kernels.hpp"

namespace savl {
namespace {

void refresh_gbest(SwarmState& state) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < state.pbest_values.size(); ++i) {
        if (state.pbest_values[i] < state.pbest_values[best]) best = i;
    }
    state.gbest_index = best;
    state.gbest_value = state.pbest_values[best];
    const auto row = state.pbest_positions.row(best);
    state.gbest_position.assign(row.begin(), row.end());
}

}  // namespace

std::size_t TrialOptions::default_containment_stride() noexcept {
#ifdef NDEBUG
    return 100;
#else
    return 1;
#endif
}

SwarmState initialize_swarm(const RunConfig& config, const BenchmarkProblem& problem,
                            RngStream& rng) {
    config.validate();
    if (problem.dimension() != config.dimension) {
        throw ConfigError("problem dimension " + std::to_string(problem.dimension()) +
                          " does not match config dimension " + std::to_string(config.dimension));
    }
    const Bounds& bounds = problem.bounds();
    const std::size_t n = config.population;
    const std::size_t dim = config.dimension;
    const VelocityLimit vl0 = velocity_limit(config.vl_strategy, bounds, 1.0, 0, config.max_iters);

    SwarmState state;
    state.positions = Matrix(n, dim);
    state.velocities = Matrix(n, dim);
    for (std::size_t i = 0; i < n; ++i) {
        auto x = state.positions.row(i);
        for (std::size_t d = 0; d < dim; ++d) {
            x[d] = rng.uniform() * (bounds.upper[d] - bounds.lower[d]) + bounds.lower[d];
        }
        auto v = state.velocities.row(i);
        for (std::size_t d = 0; d < dim; ++d) {
            v[d] = rng.uniform() * 2.0 * vl0.per_dimension[d] - vl0.per_dimension[d];
        }
    }
    state.pbest_positions = state.positions;
    state.pbest_values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        state.pbest_values[i] = problem.evaluate(state.positions.row(i));
    }
    state.fe_count = n;
    refresh_gbest(state);
    return state;
}

void update_velocity(std::span<double> v, std::span<const double> x, std::span<const double> pbest,
                     std::span<const double> gbest, double omega, double c1, double c2,
                     std::span<const double> r1, std::span<const double> r2) {
    simd::kernels().velocity_update(v.data(), x.data(), pbest.data(), gbest.data(), r1.data(),
                                    r2.data(), omega, c1, c2, v.size());
}

std::vector<double> update_velocity(std::span<const double> v, std::span<const double> x,
                                    std::span<const double> pbest, std::span<const double> gbest,
                                    double omega, double c1, double c2, RngStream& rng) {
    std::vector<double> out(v.begin(), v.end());
    std::vector<double> r1(v.size());
    std::vector<double> r2(v.size());
    for (std::size_t d = 0; d < v.size(); ++d) {
        r1[d] = rng.uniform();
        r2[d] = rng.uniform();
    }
    update_velocity(out, x, pbest, gbest, omega, c1, c2, r1, r2);
    return out;
}

StepResult step(SwarmState& state, const RunConfig& config, const BenchmarkProblem& problem,
                RngStream& rng) {
    const std::size_t k = state.iteration;
    const std::size_t n = config.population;
    const std::size_t dim = config.dimension;
    const Bounds& bounds = problem.bounds();

    StepResult result;
    result.f = evolutionary_factor(state.positions, state.gbest_index, &state.pair_distance_evals).f;
    velocity_limit(config.vl_strategy, bounds, result.f, k, config.max_iters, result.vl);
    result.mu = result.vl.mu_current;

    const double omega = inertia_at(config, k);
    const auto& kernels = simd::kernels();
    thread_local std::vector<double> r1;
    thread_local std::vector<double> r2;
    r1.resize(dim);
    r2.resize(dim);

    for (std::size_t i = 0; i < n; ++i) {
        auto x = state.positions.row(i);
        auto v = state.velocities.row(i);
        for (std::size_t d = 0; d < dim; ++d) {
            r1[d] = rng.uniform();
            r2[d] = rng.uniform();
        }
        kernels.velocity_update(v.data(), x.data(), state.pbest_positions.row(i).data(),
                                state.gbest_position.data(), r1.data(), r2.data(), omega, config.c1,
                                config.c2, dim);
        if (config.limit_handling == LimitHandling::StateCoupled) {
            handle_velocity(v, result.vl, result.f, rng);
        } else {
            clamp_velocity(v, result.vl);
        }
        kernels.add_inplace(x.data(), v.data(), dim);
        if (config.limit_handling == LimitHandling::StateCoupled) {
            handle_position(x, bounds, rng);
        } else {
            clamp_position(x, bounds);
        }
        const double fitness = problem.evaluate(x);
        ++state.fe_count;
        if (fitness < state.pbest_values[i]) {
            state.pbest_values[i] = fitness;
            auto pbest = state.pbest_positions.row(i);
            std::copy(x.begin(), x.end(), pbest.begin());
        }
    }
    refresh_gbest(state);
    ++state.iteration;
    return result;
}

bool within_limits(const SwarmState& state, const Bounds& bounds, const VelocityLimit& vl) noexcept {
    for (std::size_t i = 0; i < state.positions.rows(); ++i) {
        if (!bounds.contains(state.positions.row(i))) return false;
        const auto v = state.velocities.row(i);
        for (std::size_t d = 0; d < v.size(); ++d) {
            if (std::abs(v[d]) > vl.per_dimension[d]) return false;
        }
    }
    return true;
}

TrialRecord run_trial(const RunConfig& config, const BenchmarkProblem& problem,
                      std::uint64_t trial_index, const TrialOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    RngStream rng = derive_trial_stream(config.seed, trial_index);
    SwarmState state = initialize_swarm(config, problem, rng);

    TrialRecord record;
    record.seed = config.seed;
    record.trial_index = trial_index;
    record.best_value_history.reserve(config.max_iters);
    record.f_history.reserve(config.max_iters);
    record.mu_history.reserve(config.max_iters);
    if (state.gbest_value <= problem.acceptance()) {
        record.fe_at_acceptance = state.fe_count;
    }

    for (std::size_t k = 0; k < config.max_iters; ++k) {
        const StepResult result = step(state, config, problem, rng);
        record.best_value_history.push_back(state.gbest_value);
        record.f_history.push_back(result.f);
        record.mu_history.push_back(result.mu);
        if (!record.fe_at_acceptance && state.gbest_value <= problem.acceptance()) {
            record.fe_at_acceptance = state.fe_count;
        }
        const std::size_t stride = options.containment_stride;
        if (stride != 0 && ((k + 1) % stride == 0 || k + 1 == config.max_iters)) {
            ++record.containment_checks;
            if (!within_limits(state, problem.bounds(), result.vl)) {
                ++record.containment_violations;
            }
        }
    }

    record.final_value = state.gbest_value;
    record.best_position = state.gbest_position;
    record.total_fes = state.fe_count;
    record.pair_distance_evals = state.pair_distance_evals;
    record.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

}  // namespace savl
