#include "savl/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "savl/simd/kernels.hpp"

namespace savl {
namespace {

struct FunctionInfo {
    FunctionId id;
    std::string_view short_name;
    std::string_view long_name;
    double half_width;
    double acceptance;
};

constexpr FunctionInfo kFunctions[] = {
    {FunctionId::Sphere, "f1", "sphere", 100.0, 0.01},
    {FunctionId::Rosenbrock, "f2", "rosenbrock", 100.0, 500.0},
    {FunctionId::Rastrigin, "f3", "rastrigin", 5.12, 50.0},
    {FunctionId::Griewank, "f4", "griewank", 600.0, 0.5},
    {FunctionId::Schwefel, "f5", "schwefel", 500.0, 7000.0},
    {FunctionId::RotatedGriewank, "f6", "rotated-griewank", 600.0, 5.0},
    {FunctionId::RotatedRastrigin, "f7", "rotated-rastrigin", 5.12, 150.0},
};

const FunctionInfo& info(FunctionId id) noexcept {
    return kFunctions[static_cast<int>(id) - 1];
}

constexpr double kSchwefelOffset = 418.9829;
constexpr double kSchwefelArgmin = 420.9687463593;
constexpr std::uint64_t kRotationSeedBase = 0x0DDBA11C0FFEE5EDULL;

}  // namespace

FunctionId parse_function_id(std::string_view name) {
    std::string lowered(name);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::replace(lowered.begin(), lowered.end(), '_', '-');
    for (const auto& entry : kFunctions) {
        if (lowered == entry.short_name || lowered == entry.long_name) {
            return entry.id;
        }
    }
    throw ConfigError("unknown benchmark function '" + std::string(name) + "'");
}

std::string_view short_name(FunctionId id) noexcept { return info(id).short_name; }
std::string_view long_name(FunctionId id) noexcept { return info(id).long_name; }

bool is_rotated(FunctionId id) noexcept {
    return id == FunctionId::RotatedGriewank || id == FunctionId::RotatedRastrigin;
}

std::uint64_t default_rotation_seed(FunctionId id, std::size_t dimension) noexcept {
    return mix_seed(kRotationSeedBase, 65536ULL * static_cast<std::uint64_t>(id) + dimension);
}

Matrix make_rotation(std::size_t dimension, std::uint64_t seed) {
    if (dimension == 0) {
        throw ConfigError("rotation dimension must be positive");
    }
    RngStream rng(seed);
    Matrix r(dimension, dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
        for (std::size_t j = 0; j < dimension; ++j) {
            r(i, j) = rng.normal();
        }
    }
    for (std::size_t i = 0; i < dimension; ++i) {
        auto row = r.row(i);
        // Two projection passes keep the basis orthogonal to ~1e-15.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < i; ++k) {
                const auto prev = r.row(k);
                const double proj = simd::dot(row, prev);
                for (std::size_t j = 0; j < dimension; ++j) {
                    row[j] -= proj * prev[j];
                }
            }
        }
        const double norm = std::sqrt(simd::dot(row, row));
        if (!(norm > 1e-12)) {
            throw DomainError("rotation seed produced a rank-deficient matrix");
        }
        std::size_t pivot = 0;
        for (std::size_t j = 1; j < dimension; ++j) {
            if (std::abs(row[j]) > std::abs(row[pivot])) pivot = j;
        }
        const double scale = (row[pivot] < 0.0 ? -1.0 : 1.0) / norm;
        for (double& value : row) {
            value *= scale;
        }
    }
    return r;
}

namespace functions {

double sphere(std::span<const double> x) noexcept { return simd::dot(x, x); }

double rosenbrock(std::span<const double> x) noexcept {
    double sum = 0.0;
    for (std::size_t d = 0; d + 1 < x.size(); ++d) {
        const double a = x[d + 1] - x[d] * x[d];
        const double b = x[d] - 1.0;
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

double rastrigin(std::span<const double> x) noexcept {
    double sum = 0.0;
    for (double xd : x) {
        sum += xd * xd - 10.0 * std::cos(2.0 * std::numbers::pi * xd) + 10.0;
    }
    return sum;
}

double griewank(std::span<const double> x) noexcept {
    double sum = 0.0;
    double product = 1.0;
    for (std::size_t d = 0; d < x.size(); ++d) {
        sum += x[d] * x[d];
        product *= std::cos(x[d] / std::sqrt(static_cast<double>(d + 1)));
    }
    return 1.0 + sum / 4000.0 - product;
}

double schwefel(std::span<const double> x) noexcept {
    double sum = 0.0;
    for (double xd : x) {
        sum += xd * std::sin(std::sqrt(std::abs(xd)));
    }
    return kSchwefelOffset * static_cast<double>(x.size()) - sum;
}

}  // namespace functions

BenchmarkProblem::BenchmarkProblem(FunctionId id, std::size_t dimension,
                                   std::optional<std::uint64_t> rotation_seed)
    : id_(id),
      dimension_(dimension),
      bounds_(Bounds::symmetric(dimension, info(id).half_width)),
      acceptance_(info(id).acceptance) {
    if (dimension == 0) {
        throw ConfigError("benchmark dimension must be positive");
    }
    if (is_rotated(id)) {
        rotation_seed_ = rotation_seed.value_or(default_rotation_seed(id, dimension));
        rotation_ = make_rotation(dimension, *rotation_seed_);
    }
}

BenchmarkProblem BenchmarkProblem::from_name(std::string_view name, std::size_t dimension,
                                             std::optional<std::uint64_t> rotation_seed) {
    return BenchmarkProblem(parse_function_id(name), dimension, rotation_seed);
}

std::vector<double> BenchmarkProblem::optimum() const {
    switch (id_) {
    case FunctionId::Rosenbrock:
        return std::vector<double>(dimension_, 1.0);
    case FunctionId::Schwefel:
        return std::vector<double>(dimension_, kSchwefelArgmin);
    default:
        return std::vector<double>(dimension_, 0.0);
    }
}

double BenchmarkProblem::evaluate(std::span<const double> x) const {
    if (x.size() != dimension_) {
        throw ConfigError("evaluate: expected " + std::to_string(dimension_) +
                          " coordinates, got " + std::to_string(x.size()));
    }
    switch (id_) {
    case FunctionId::Sphere:
        return functions::sphere(x);
    case FunctionId::Rosenbrock:
        return functions::rosenbrock(x);
    case FunctionId::Rastrigin:
        return functions::rastrigin(x);
    case FunctionId::Griewank:
        return functions::griewank(x);
    case FunctionId::Schwefel:
        return functions::schwefel(x);
    case FunctionId::RotatedGriewank:
    case FunctionId::RotatedRastrigin: {
        thread_local std::vector<double> z;
        z.resize(dimension_);
        const auto& kernels = simd::kernels();
        for (std::size_t i = 0; i < dimension_; ++i) {
            z[i] = kernels.dot(rotation_->row(i).data(), x.data(), dimension_);
        }
        return id_ == FunctionId::RotatedGriewank ? functions::griewank(z)
                                                  : functions::rastrigin(z);
    }
    }
    return 0.0;
}

}  // namespace savl
