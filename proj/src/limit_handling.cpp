#include "savl/limit_handling.hpp"

#include <algorithm>

namespace savl {

void handle_velocity(std::span<double> v, const VelocityLimit& vl, double f, RngStream& rng) {
    const bool global_search = f >= 0.5;
    for (std::size_t d = 0; d < v.size(); ++d) {
        const double limit = vl.per_dimension[d];
        if (v[d] > limit || v[d] < -limit) {
            if (global_search) {
                v[d] = std::min(limit, std::max(-limit, v[d]));
            } else {
                v[d] = rng.uniform() * 2.0 * limit - limit;
            }
        }
    }
}

void handle_position(std::span<double> x, const Bounds& bounds, RngStream& rng) {
    for (std::size_t d = 0; d < x.size(); ++d) {
        if (x[d] > bounds.upper[d] || x[d] < bounds.lower[d]) {
            x[d] = rng.uniform() * (bounds.upper[d] - bounds.lower[d]) + bounds.lower[d];
        }
    }
}

void clamp_velocity(std::span<double> v, const VelocityLimit& vl) noexcept {
    for (std::size_t d = 0; d < v.size(); ++d) {
        v[d] = std::clamp(v[d], -vl.per_dimension[d], vl.per_dimension[d]);
    }
}

void clamp_position(std::span<double> x, const Bounds& bounds) noexcept {
    for (std::size_t d = 0; d < x.size(); ++d) {
        x[d] = std::clamp(x[d], bounds.lower[d], bounds.upper[d]);
    }
}

}  // namespace savl
