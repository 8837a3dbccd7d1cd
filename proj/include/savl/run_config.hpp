#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "savl/vl_strategy.hpp"

namespace savl {

/// How velocities and positions that leave their limits are repaired.
enum class LimitHandling {
    /// Velocity: clamp when f >= 0.5, redraw in [-VL, VL] otherwise.
    /// Position: redraw uniformly inside the bounds.
    StateCoupled,
    /// Classic nearest-limit clamp for both velocity and position.
    Clamp,
};

std::string_view to_string(LimitHandling handling) noexcept;
LimitHandling parse_limit_handling(std::string_view name);

struct RunConfig {
    std::size_t dimension = 10;
    std::size_t population = 10;
    std::size_t max_iters = 3000;
    double inertia_start = 0.9;
    double inertia_end = 0.4;
    double c1 = 2.05;
    double c2 = 2.05;
    std::uint64_t seed = 0;
    VlStrategyConfig vl_strategy = VlStrategyConfig::state_based(0.4, 0.7);
    LimitHandling limit_handling = LimitHandling::StateCoupled;

    /// Throws ConfigError when an invariant is violated.
    void validate() const;
};

/// Linear inertia schedule that hits inertia_start at k = 0 and inertia_end at
/// k = max_iters - 1. Throws std::out_of_range for k >= max_iters.
double inertia_at(const RunConfig& config, std::size_t k);

}  // namespace savl
