#include "savl/ese.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "savl/simd/kernels.hpp"

namespace savl {

std::string_view to_string(SearchPhase phase) noexcept {
    switch (phase) {
    case SearchPhase::Convergence:
        return "convergence";
    case SearchPhase::Exploitation:
        return "exploitation";
    case SearchPhase::Exploration:
        return "exploration";
    case SearchPhase::JumpingOut:
        return "jumping-out";
    }
    return "unknown";
}

std::vector<double> mean_distances(const Matrix& positions, std::uint64_t* pair_counter) {
    const std::size_t n = positions.rows();
    if (n < 2) {
        throw DomainError("mean_distances needs at least two particles");
    }
    const auto& kernels = simd::kernels();
    const std::size_t dim = positions.cols();
    std::vector<double> d(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double* xi = positions.row(i).data();
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dist = std::sqrt(kernels.squared_distance(xi, positions.row(j).data(), dim));
            d[i] += dist;
            d[j] += dist;
        }
    }
    if (pair_counter != nullptr) {
        *pair_counter += static_cast<std::uint64_t>(n) * (n - 1) / 2;
    }
    const double scale = 1.0 / static_cast<double>(n - 1);
    for (double& value : d) {
        value *= scale;
    }
    return d;
}

EvolutionaryFactor evolutionary_factor(const Matrix& positions, std::size_t gbest_index,
                                       std::uint64_t* pair_counter) {
    if (gbest_index >= positions.rows()) {
        throw std::out_of_range("gbest_index out of range");
    }
    const auto d = mean_distances(positions, pair_counter);
    const auto [min_it, max_it] = std::minmax_element(d.begin(), d.end());
    EvolutionaryFactor out;
    out.d_g = d[gbest_index];
    out.d_min = *min_it;
    out.d_max = *max_it;
    const double span = out.d_max - out.d_min;
    // A collapsed swarm has no spread to normalize; it is maximally converged.
    out.f = span > 0.0 ? std::clamp((out.d_g - out.d_min) / span, 0.0, 1.0) : 0.0;
    return out;
}

SearchState classify_state(double f) {
    if (!(f >= 0.0 && f <= 1.0)) {
        throw DomainError("evolutionary factor outside [0, 1]");
    }
    if (f < 0.25) return {SearchPhase::Convergence, SearchMode::LocalSearching};
    if (f < 0.5) return {SearchPhase::Exploitation, SearchMode::LocalSearching};
    if (f < 0.75) return {SearchPhase::Exploration, SearchMode::GlobalSearching};
    return {SearchPhase::JumpingOut, SearchMode::GlobalSearching};
}

}  // namespace savl
