#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace savl {

/// Invalid configuration (bad parameters, unknown names, dimension mismatches).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class IoError : public std::runtime_error {
public:
    IoError(const std::filesystem::path& path, const std::string& what)
        : std::runtime_error(what + ": " + path.string()), path_(path) {}

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
};

/// Per-dimension box [lower, upper] of the search space.
struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    static Bounds symmetric(std::size_t dimension, double half_width);

    std::size_t dimension() const noexcept { return lower.size(); }
    double half_range(std::size_t d) const noexcept { return 0.5 * (upper[d] - lower[d]); }

    /// Throws ConfigError unless sizes agree and lower[d] < upper[d] everywhere.
    void validate() const;

    /// Closed-interval membership, per dimension.
    bool contains(std::span<const double> x) const noexcept;
};

/// Dense row-major matrix. Rows are particles, columns are dimensions.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * cols_, cols_};
    }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<const double> data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed mixing used for every derived stream:
///   mix_seed(a, b) = splitmix64(a ^ splitmix64(b + 0x9E3779B97F4A7C15)).
/// Pure and platform independent.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept;

/// Deterministic uniform stream backed by std::mt19937_64, whose output sequence
/// is fixed by the C++ standard. Reals are formed from the top 53 bits, so the
/// draws do not depend on the standard library's distribution implementations.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    /// Uniform in [0, 1).
    double uniform() noexcept {
        ++draws_;
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; consumes two uniforms.
    double normal() noexcept;

    std::uint64_t seed() const noexcept { return seed_; }

    /// Number of uniforms consumed so far.
    std::uint64_t position() const noexcept { return draws_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
};

/// Stream for trial `trial_index` of an experiment seeded with `master_seed`;
/// the engine seed is mix_seed(master_seed, trial_index).
RngStream derive_trial_stream(std::uint64_t master_seed, std::uint64_t trial_index);

}  // namespace savl
