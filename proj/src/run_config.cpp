#include "savl/run_config.hpp"

#include <stdexcept>
#include <string>

namespace savl {

std::string_view to_string(LimitHandling handling) noexcept {
    return handling == LimitHandling::Clamp ? "clamp" : "state-coupled";
}

LimitHandling parse_limit_handling(std::string_view name) {
    if (name == "state-coupled" || name == "state_coupled") return LimitHandling::StateCoupled;
    if (name == "clamp") return LimitHandling::Clamp;
    throw ConfigError("unknown limit handling '" + std::string(name) + "'");
}

void RunConfig::validate() const {
    if (dimension == 0) throw ConfigError("dimension must be positive");
    if (population < 2) throw ConfigError("population must be at least 2");
    if (max_iters == 0) throw ConfigError("max_iters must be positive");
    if (inertia_start < inertia_end) throw ConfigError("inertia_start must be >= inertia_end");
    if (!(c1 > 0.0) || !(c2 > 0.0)) throw ConfigError("c1 and c2 must be positive");
    vl_strategy.validate();
}

double inertia_at(const RunConfig& config, std::size_t k) {
    if (k >= config.max_iters) {
        throw std::out_of_range("iteration index " + std::to_string(k) + " >= max_iters");
    }
    if (config.max_iters == 1) return config.inertia_start;
    const double progress = static_cast<double>(k) / static_cast<double>(config.max_iters - 1);
    return config.inertia_start + (config.inertia_end - config.inertia_start) * progress;
}

}  // namespace savl
