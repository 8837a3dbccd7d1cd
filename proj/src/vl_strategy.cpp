#include "savl/vl_strategy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace savl {

std::string_view to_string(VlKind kind) noexcept {
    switch (kind) {
    case VlKind::StateBased:
        return "state-based";
    case VlKind::Fixed:
        return "fixed";
    case VlKind::IterationLinear:
        return "iteration-linear";
    }
    return "unknown";
}

VlKind parse_vl_kind(std::string_view name) {
    if (name == "state-based" || name == "state_based") return VlKind::StateBased;
    if (name == "fixed") return VlKind::Fixed;
    if (name == "iteration-linear" || name == "iteration_linear") return VlKind::IterationLinear;
    throw ConfigError("unknown velocity-limit strategy '" + std::string(name) + "'");
}

SigmoidCoefficients derive_alpha_beta(double mu_min, double mu_max) {
    if (!(mu_min > 0.0 && mu_min < 1.0) || !(mu_max > 0.0 && mu_max < 1.0)) {
        throw ConfigError("mu_min and mu_max must lie in (0, 1)");
    }
    if (mu_min > mu_max) {
        throw ConfigError("mu_min must not exceed mu_max");
    }
    const double alpha = 1.0 / mu_min - 1.0;
    const double beta = -std::log((1.0 / mu_max - 1.0) / alpha);
    return {alpha, beta};
}

double sigmoid_mu(const SigmoidCoefficients& coeffs, double f) noexcept {
    return 1.0 / (1.0 + coeffs.alpha * std::exp(-coeffs.beta * f));
}

VlStrategyConfig VlStrategyConfig::state_based(double mu_min, double mu_max) {
    VlStrategyConfig config;
    config.kind = VlKind::StateBased;
    config.mu_min = mu_min;
    config.mu_max = mu_max;
    const double fitted_max = mu_max == 1.0 ? kMuMaxCap : mu_max;
    const auto coeffs = derive_alpha_beta(mu_min, fitted_max);
    config.alpha = coeffs.alpha;
    config.beta = coeffs.beta;
    return config;
}

VlStrategyConfig VlStrategyConfig::fixed(double mu_fixed) {
    VlStrategyConfig config;
    config.kind = VlKind::Fixed;
    config.mu_fixed = mu_fixed;
    config.mu_min = mu_fixed;
    config.mu_max = mu_fixed;
    config.validate();
    return config;
}

VlStrategyConfig VlStrategyConfig::iteration_linear(double mu_min, double mu_max) {
    VlStrategyConfig config;
    config.kind = VlKind::IterationLinear;
    config.mu_min = mu_min;
    config.mu_max = mu_max;
    config.validate();
    return config;
}

void VlStrategyConfig::validate() const {
    auto in_unit = [](double mu) { return mu > 0.0 && mu <= 1.0; };
    switch (kind) {
    case VlKind::Fixed:
        if (!in_unit(mu_fixed)) throw ConfigError("mu_fixed must lie in (0, 1]");
        return;
    case VlKind::IterationLinear:
        if (!in_unit(mu_min) || !in_unit(mu_max)) {
            throw ConfigError("mu_min and mu_max must lie in (0, 1]");
        }
        if (mu_min > mu_max) throw ConfigError("mu_min must not exceed mu_max");
        return;
    case VlKind::StateBased: {
        if (!in_unit(mu_max) || !(mu_min > 0.0 && mu_min < 1.0)) {
            throw ConfigError("state-based strategy needs 0 < mu_min < 1 and 0 < mu_max <= 1");
        }
        if (mu_min > mu_max) throw ConfigError("mu_min must not exceed mu_max");
        const auto expected = derive_alpha_beta(mu_min, mu_max == 1.0 ? kMuMaxCap : mu_max);
        if (alpha != expected.alpha || beta != expected.beta) {
            throw ConfigError("alpha/beta inconsistent with (mu_min, mu_max)");
        }
        return;
    }
    }
}

double velocity_proportion(const VlStrategyConfig& config, double f, std::size_t k,
                           std::size_t max_iters) {
    if (!(f >= 0.0 && f <= 1.0)) {
        throw DomainError("evolutionary factor outside [0, 1]");
    }
    if (k >= max_iters) {
        throw std::out_of_range("iteration index " + std::to_string(k) + " >= max_iters");
    }
    switch (config.kind) {
    case VlKind::StateBased:
        return sigmoid_mu({config.alpha, config.beta}, f);
    case VlKind::Fixed:
        return config.mu_fixed;
    case VlKind::IterationLinear: {
        if (max_iters == 1) return config.mu_max;
        const double progress = static_cast<double>(k) / static_cast<double>(max_iters - 1);
        return config.mu_max - (config.mu_max - config.mu_min) * progress;
    }
    }
    return config.mu_fixed;
}

void velocity_limit(const VlStrategyConfig& config, const Bounds& bounds, double f, std::size_t k,
                    std::size_t max_iters, VelocityLimit& out) {
    const double mu = velocity_proportion(config, f, k, max_iters);
    out.mu_current = mu;
    out.per_dimension.resize(bounds.dimension());
    for (std::size_t d = 0; d < bounds.dimension(); ++d) {
        out.per_dimension[d] = mu * bounds.half_range(d);
    }
}

VelocityLimit velocity_limit(const VlStrategyConfig& config, const Bounds& bounds, double f,
                             std::size_t k, std::size_t max_iters) {
    VelocityLimit out;
    velocity_limit(config, bounds, f, k, max_iters, out);
    return out;
}

}  // namespace savl
