#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "savl/core.hpp"

namespace savl {

enum class FunctionId {
    Sphere = 1,
    Rosenbrock,
    Rastrigin,
    Griewank,
    Schwefel,
    RotatedGriewank,
    RotatedRastrigin,
};

/// "f1".."f7" or the long names ("sphere", "rotated-rastrigin", ...).
/// Throws ConfigError naming the unknown id.
FunctionId parse_function_id(std::string_view name);
std::string_view short_name(FunctionId id) noexcept;
std::string_view long_name(FunctionId id) noexcept;
bool is_rotated(FunctionId id) noexcept;

/// Orthonormalized (modified Gram-Schmidt, two passes) matrix of seeded
/// standard normals. Row order is fixed, and each row's sign is chosen so its
/// largest-magnitude entry is positive.
Matrix make_rotation(std::size_t dimension, std::uint64_t seed);

/// Rotation seed used when none is given: mix_seed(0x0DDBA11C0FFEE5ED, 65536 * id + D).
/// Fixed per (function, dimension) so every experiment sees the same matrix.
std::uint64_t default_rotation_seed(FunctionId id, std::size_t dimension) noexcept;

/// Standard base functions (without rotation). Schwefel uses the 418.9829*D offset.
namespace functions {
double sphere(std::span<const double> x) noexcept;
double rosenbrock(std::span<const double> x) noexcept;
double rastrigin(std::span<const double> x) noexcept;
double griewank(std::span<const double> x) noexcept;
double schwefel(std::span<const double> x) noexcept;
}  // namespace functions

class BenchmarkProblem {
public:
    /// Rotated functions draw their matrix from rotation_seed, or from
    /// default_rotation_seed() when it is not given.
    BenchmarkProblem(FunctionId id, std::size_t dimension,
                     std::optional<std::uint64_t> rotation_seed = std::nullopt);

    static BenchmarkProblem from_name(std::string_view name, std::size_t dimension,
                                      std::optional<std::uint64_t> rotation_seed = std::nullopt);

    FunctionId id() const noexcept { return id_; }
    std::string_view name() const noexcept { return short_name(id_); }
    std::size_t dimension() const noexcept { return dimension_; }
    const Bounds& bounds() const noexcept { return bounds_; }
    double acceptance() const noexcept { return acceptance_; }
    double global_min_value() const noexcept { return 0.0; }
    const std::optional<Matrix>& rotation() const noexcept { return rotation_; }
    std::optional<std::uint64_t> rotation_seed() const noexcept { return rotation_seed_; }

    /// Location of the global minimum.
    std::vector<double> optimum() const;

    /// Throws ConfigError on dimension mismatch.
    double evaluate(std::span<const double> x) const;

private:
    FunctionId id_;
    std::size_t dimension_;
    Bounds bounds_;
    double acceptance_;
    std::optional<Matrix> rotation_;
    std::optional<std::uint64_t> rotation_seed_;
};

}  // namespace savl
