// Compiled with -mavx2; only reached after a runtime CPU check.
#include "savl/simd/kernels.hpp"

#include <immintrin.h>

namespace savl::simd::detail {
namespace {

inline double reduce_lanes(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);   // l0 l1
    const __m128d hi = _mm256_extractf128_pd(acc, 1); // l2 l3
    const __m128d pair = _mm_add_pd(lo, hi);          // l0+l2, l1+l3
    return _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    double sum = reduce_lanes(acc);
    for (; i < n; ++i) {
        sum = sum + a[i] * b[i];
    }
    return sum;
}

double squared_distance_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
    }
    double sum = reduce_lanes(acc);
    for (; i < n; ++i) {
        const double diff = a[i] - b[i];
        sum = sum + diff * diff;
    }
    return sum;
}

void velocity_update_avx2(double* v, const double* x, const double* p, const double* g,
                          const double* r1, const double* r2, double omega, double c1, double c2,
                          std::size_t n) {
    const __m256d w = _mm256_set1_pd(omega);
    const __m256d k1 = _mm256_set1_pd(c1);
    const __m256d k2 = _mm256_set1_pd(c2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xi = _mm256_loadu_pd(x + i);
        const __m256d cognitive = _mm256_mul_pd(_mm256_mul_pd(k1, _mm256_loadu_pd(r1 + i)),
                                                _mm256_sub_pd(_mm256_loadu_pd(p + i), xi));
        const __m256d social = _mm256_mul_pd(_mm256_mul_pd(k2, _mm256_loadu_pd(r2 + i)),
                                             _mm256_sub_pd(_mm256_loadu_pd(g + i), xi));
        const __m256d inertia = _mm256_mul_pd(w, _mm256_loadu_pd(v + i));
        _mm256_storeu_pd(v + i, _mm256_add_pd(_mm256_add_pd(inertia, cognitive), social));
    }
    for (; i < n; ++i) {
        const double cognitive = (c1 * r1[i]) * (p[i] - x[i]);
        const double social = (c2 * r2[i]) * (g[i] - x[i]);
        v[i] = (omega * v[i] + cognitive) + social;
    }
}

void add_inplace_avx2(double* x, const double* v, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(x + i, _mm256_add_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(v + i)));
    }
    for (; i < n; ++i) {
        x[i] = x[i] + v[i];
    }
}

}  // namespace

const KernelTable avx2_table{dot_avx2, squared_distance_avx2, velocity_update_avx2,
                             add_inplace_avx2};

}  // namespace savl::simd::detail
