#include "savl/core.hpp"

#include <cmath>
#include <numbers>

namespace savl {

Bounds Bounds::symmetric(std::size_t dimension, double half_width) {
    return Bounds{std::vector<double>(dimension, -half_width),
                  std::vector<double>(dimension, half_width)};
}

void Bounds::validate() const {
    if (lower.size() != upper.size()) {
        throw ConfigError("bounds: lower and upper have different dimension");
    }
    if (lower.empty()) {
        throw ConfigError("bounds: dimension must be positive");
    }
    for (std::size_t d = 0; d < lower.size(); ++d) {
        if (!(lower[d] < upper[d])) {
            throw ConfigError("bounds: lower >= upper in dimension " + std::to_string(d));
        }
    }
}

bool Bounds::contains(std::span<const double> x) const noexcept {
    if (x.size() != lower.size()) {
        return false;
    }
    for (std::size_t d = 0; d < x.size(); ++d) {
        if (x[d] < lower[d] || x[d] > upper[d]) {
            return false;
        }
    }
    return true;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept {
    return splitmix64(a ^ splitmix64(b + 0x9E3779B97F4A7C15ULL));
}

double RngStream::normal() noexcept {
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RngStream derive_trial_stream(std::uint64_t master_seed, std::uint64_t trial_index) {
    return RngStream(mix_seed(master_seed, trial_index));
}

}  // namespace savl
