#pragma once

// Evolutionary state estimation: how spread out the swarm is around its best
// particle, normalized to [0, 1].

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "savl/core.hpp"

namespace savl {

struct EvolutionaryFactor {
    double f = 0.0;
    double d_g = 0.0;
    double d_min = 0.0;
    double d_max = 0.0;
};

enum class SearchPhase { Convergence, Exploitation, Exploration, JumpingOut };
enum class SearchMode { LocalSearching, GlobalSearching };

struct SearchState {
    SearchPhase phase;
    SearchMode mode;
};

std::string_view to_string(SearchPhase phase) noexcept;

/// d[i] = mean Euclidean distance from particle i to every other particle.
/// Each unordered pair is measured once; `pair_counter`, when given, is
/// incremented by N(N-1)/2. Throws DomainError for fewer than two rows.
std::vector<double> mean_distances(const Matrix& positions, std::uint64_t* pair_counter = nullptr);

/// f = (d_g - d_min) / (d_max - d_min), with f = 0 when d_max == d_min.
EvolutionaryFactor evolutionary_factor(const Matrix& positions, std::size_t gbest_index,
                                       std::uint64_t* pair_counter = nullptr);

/// Crisp intervals: [0,.25) convergence, [.25,.5) exploitation, [.5,.75)
/// exploration, [.75,1] jumping-out. Throws DomainError outside [0, 1].
SearchState classify_state(double f);

}  // namespace savl
