#include "savl/simd/kernels.hpp"

namespace savl::simd::detail {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        for (std::size_t l = 0; l < 4; ++l) {
            acc[l] = acc[l] + a[i + l] * b[i + l];
        }
    }
    double sum = (acc[0] + acc[2]) + (acc[1] + acc[3]);
    for (; i < n; ++i) {
        sum = sum + a[i] * b[i];
    }
    return sum;
}

double squared_distance_scalar(const double* a, const double* b, std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        for (std::size_t l = 0; l < 4; ++l) {
            const double diff = a[i + l] - b[i + l];
            acc[l] = acc[l] + diff * diff;
        }
    }
    double sum = (acc[0] + acc[2]) + (acc[1] + acc[3]);
    for (; i < n; ++i) {
        const double diff = a[i] - b[i];
        sum = sum + diff * diff;
    }
    return sum;
}

void velocity_update_scalar(double* v, const double* x, const double* p, const double* g,
                            const double* r1, const double* r2, double omega, double c1,
                            double c2, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double cognitive = (c1 * r1[i]) * (p[i] - x[i]);
        const double social = (c2 * r2[i]) * (g[i] - x[i]);
        v[i] = (omega * v[i] + cognitive) + social;
    }
}

void add_inplace_scalar(double* x, const double* v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = x[i] + v[i];
    }
}

}  // namespace

const KernelTable scalar_table{dot_scalar, squared_distance_scalar, velocity_update_scalar,
                               add_inplace_scalar};

}  // namespace savl::simd::detail
