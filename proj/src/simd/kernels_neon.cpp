#include "savl/simd/kernels.hpp"

#include <arm_neon.h>

namespace savl::simd::detail {
namespace {

// Two 2-lane registers hold lanes (l0, l1) and (l2, l3).
inline double reduce_lanes(float64x2_t acc01, float64x2_t acc23) {
    const float64x2_t pair = vaddq_f64(acc01, acc23);
    return vgetq_lane_f64(pair, 0) + vgetq_lane_f64(pair, 1);
}

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
        acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
    }
    double sum = reduce_lanes(acc01, acc23);
    for (; i < n; ++i) {
        sum = sum + a[i] * b[i];
    }
    return sum;
}

double squared_distance_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float64x2_t d01 = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        const float64x2_t d23 = vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
        acc01 = vaddq_f64(acc01, vmulq_f64(d01, d01));
        acc23 = vaddq_f64(acc23, vmulq_f64(d23, d23));
    }
    double sum = reduce_lanes(acc01, acc23);
    for (; i < n; ++i) {
        const double diff = a[i] - b[i];
        sum = sum + diff * diff;
    }
    return sum;
}

void velocity_update_neon(double* v, const double* x, const double* p, const double* g,
                          const double* r1, const double* r2, double omega, double c1, double c2,
                          std::size_t n) {
    const float64x2_t w = vdupq_n_f64(omega);
    const float64x2_t k1 = vdupq_n_f64(c1);
    const float64x2_t k2 = vdupq_n_f64(c2);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t xi = vld1q_f64(x + i);
        const float64x2_t cognitive =
            vmulq_f64(vmulq_f64(k1, vld1q_f64(r1 + i)), vsubq_f64(vld1q_f64(p + i), xi));
        const float64x2_t social =
            vmulq_f64(vmulq_f64(k2, vld1q_f64(r2 + i)), vsubq_f64(vld1q_f64(g + i), xi));
        const float64x2_t inertia = vmulq_f64(w, vld1q_f64(v + i));
        vst1q_f64(v + i, vaddq_f64(vaddq_f64(inertia, cognitive), social));
    }
    for (; i < n; ++i) {
        const double cognitive = (c1 * r1[i]) * (p[i] - x[i]);
        const double social = (c2 * r2[i]) * (g[i] - x[i]);
        v[i] = (omega * v[i] + cognitive) + social;
    }
}

void add_inplace_neon(double* x, const double* v, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(x + i, vaddq_f64(vld1q_f64(x + i), vld1q_f64(v + i)));
    }
    for (; i < n; ++i) {
        x[i] = x[i] + v[i];
    }
}

}  // namespace

const KernelTable neon_table{dot_neon, squared_distance_neon, velocity_update_neon,
                             add_inplace_neon};

}  // namespace savl::simd::detail
