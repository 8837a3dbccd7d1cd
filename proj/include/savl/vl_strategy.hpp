#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "savl/core.hpp"

namespace savl {

enum class VlKind { StateBased, Fixed, IterationLinear };

std::string_view to_string(VlKind kind) noexcept;
/// Accepts "state-based", "fixed", "iteration-linear" (and underscore spellings).
VlKind parse_vl_kind(std::string_view name);

/// Sigmoid coefficients that pin mu(0) = mu_min and mu(1) = mu_max.
struct SigmoidCoefficients {
    double alpha;
    double beta;
};

/// Requires 0 < mu_min <= mu_max < 1; throws ConfigError otherwise.
SigmoidCoefficients derive_alpha_beta(double mu_min, double mu_max);

/// 1 / (1 + alpha * exp(-beta * f))
double sigmoid_mu(const SigmoidCoefficients& coeffs, double f) noexcept;

/// Velocity-limit strategy as a proportion of the per-dimension half range.
struct VlStrategyConfig {
    /// state_based() accepts mu_max = 1 and fits the sigmoid against this cap.
    static constexpr double kMuMaxCap = 1.0 - 1e-9;
    static constexpr double kDefaultMuFixed = 0.5;

    VlKind kind = VlKind::StateBased;
    double mu_min = 0.4;
    double mu_max = 0.7;
    double mu_fixed = kDefaultMuFixed;
    double alpha = 1.5;
    double beta = 0.0;

    static VlStrategyConfig state_based(double mu_min, double mu_max);
    static VlStrategyConfig fixed(double mu_fixed = kDefaultMuFixed);
    static VlStrategyConfig iteration_linear(double mu_min, double mu_max);

    void validate() const;
};

struct VelocityLimit {
    std::vector<double> per_dimension;
    double mu_current = 0.0;
};

/// Proportion in force for evolutionary factor f at iteration k.
double velocity_proportion(const VlStrategyConfig& config, double f, std::size_t k,
                           std::size_t max_iters);

/// VL^d = mu * (upper[d] - lower[d]) / 2. Throws DomainError if f is outside [0, 1]
/// and std::out_of_range if k >= max_iters.
VelocityLimit velocity_limit(const VlStrategyConfig& config, const Bounds& bounds, double f,
                             std::size_t k, std::size_t max_iters);

/// In-place variant that reuses out.per_dimension's storage.
void velocity_limit(const VlStrategyConfig& config, const Bounds& bounds, double f, std::size_t k,
                    std::size_t max_iters, VelocityLimit& out);

}  // namespace savl
