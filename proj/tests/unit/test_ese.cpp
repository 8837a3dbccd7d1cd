#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "common/naive_oracles.hpp"
#include "savl/ese.hpp"

using namespace savl;

namespace {

Matrix to_matrix(const oracle::Swarm& swarm) {
    Matrix m(swarm.size(), swarm.front().size());
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        for (std::size_t d = 0; d < swarm[i].size(); ++d) m(i, d) = swarm[i][d];
    }
    return m;
}

oracle::Swarm random_swarm(RngStream& rng, std::size_t n, std::size_t dim) {
    oracle::Swarm s(n, std::vector<double>(dim));
    for (auto& row : s) {
        for (double& v : row) v = rng.uniform() * 200.0 - 100.0;
    }
    return s;
}

}  // namespace

TEST_CASE("mean distances on hand-computed swarms") {
    CHECK(mean_distances(to_matrix({{0.0}, {1.0}, {2.0}})) == std::vector<double>{1.5, 1.0, 1.5});
    CHECK(mean_distances(to_matrix({{0.0, 0.0}, {3.0, 4.0}})) == std::vector<double>{5.0, 5.0});
    CHECK(mean_distances(to_matrix({{2.0, 2.0}, {2.0, 2.0}, {2.0, 2.0}})) ==
          std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("mean distances needs two particles") {
    CHECK_THROWS_AS(mean_distances(Matrix(1, 3)), DomainError);
}

TEST_CASE("evolutionary factor on hand-computed swarms") {
    const Matrix line = to_matrix({{0.0}, {1.0}, {2.0}});
    const auto centre = evolutionary_factor(line, 1);
    CHECK(centre.f == 0.0);
    CHECK(centre.d_g == 1.0);
    CHECK(centre.d_min == 1.0);
    CHECK(centre.d_max == 1.5);
    CHECK(evolutionary_factor(line, 0).f == 1.0);
    CHECK(evolutionary_factor(Matrix(4, 3, 7.0), 2).f == 0.0);
    CHECK_THROWS_AS(evolutionary_factor(line, 3), std::out_of_range);
}

TEST_CASE("mean distances match the naive double loop") {
    RngStream rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 7);
        const std::size_t dim = 1 + static_cast<std::size_t>(rng.uniform() * 9);
        const auto swarm = random_swarm(rng, n, dim);
        const auto expected = oracle::mean_distances(swarm);
        const auto actual = mean_distances(to_matrix(swarm));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(actual[i] == doctest::Approx(expected[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("evolutionary factor is invariant under translation, scaling and permutation") {
    RngStream rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform() * 6);
        const std::size_t dim = 1 + static_cast<std::size_t>(rng.uniform() * 5);
        auto swarm = random_swarm(rng, n, dim);
        const std::size_t g = static_cast<std::size_t>(rng.uniform() * n);
        const double f = evolutionary_factor(to_matrix(swarm), g).f;

        auto moved = swarm;
        const double scale = 0.1 + rng.uniform() * 10.0;
        const double shift = rng.uniform() * 50.0 - 25.0;
        for (auto& row : moved) {
            for (double& v : row) v = v * scale + shift;
        }
        CHECK(evolutionary_factor(to_matrix(moved), g).f == doctest::Approx(f).epsilon(1e-9));

        // Reverse every particle except the best one.
        auto permuted = swarm;
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != g) others.push_back(i);
        }
        for (std::size_t k = 0; k < others.size(); ++k) {
            permuted[others[k]] = swarm[others[others.size() - 1 - k]];
        }
        CHECK(evolutionary_factor(to_matrix(permuted), g).f == doctest::Approx(f).epsilon(1e-12));
    }
}

TEST_CASE("state estimation evaluates exactly N(N-1)/2 pair distances") {
    for (std::size_t n : {2u, 3u, 10u, 20u}) {
        std::uint64_t pairs = 0;
        evolutionary_factor(Matrix(n, 4, 1.0), 0, &pairs);
        CHECK(pairs == n * (n - 1) / 2);
    }
}

TEST_CASE("state classification intervals") {
    CHECK(classify_state(0.0).phase == SearchPhase::Convergence);
    CHECK(classify_state(0.0).mode == SearchMode::LocalSearching);
    CHECK(classify_state(0.3).phase == SearchPhase::Exploitation);
    CHECK(classify_state(0.3).mode == SearchMode::LocalSearching);
    CHECK(classify_state(0.5).phase == SearchPhase::Exploration);
    CHECK(classify_state(0.5).mode == SearchMode::GlobalSearching);
    CHECK(classify_state(0.75).phase == SearchPhase::JumpingOut);
    CHECK(classify_state(0.75).mode == SearchMode::GlobalSearching);
    CHECK(classify_state(1.0).phase == SearchPhase::JumpingOut);
    CHECK_THROWS_AS(classify_state(-0.01), DomainError);
    CHECK_THROWS_AS(classify_state(1.01), DomainError);
    CHECK_THROWS_AS(classify_state(std::nan("")), DomainError);
}
