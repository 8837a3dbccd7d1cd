#pragma once

// Data-parallel inner loops of the optimizer with a scalar reference backend
// and SIMD variants selected at runtime.
//
// Reductions use a fixed 4-lane accumulation order in every backend:
//   lane l accumulates elements i with i % 4 == l over the full blocks,
//   the lanes combine as (l0 + l2) + (l1 + l3), then the tail is added in order.
// Together with -ffp-contract=off this makes all backends bit-identical.

#include <cstddef>
#include <span>
#include <string_view>

namespace savl::simd {

enum class Backend { Scalar, Avx2, Neon };

struct KernelTable {
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*squared_distance)(const double* a, const double* b, std::size_t n);
    /// v = omega*v + (c1*r1)*(p - x) + (c2*r2)*(g - x), elementwise.
    void (*velocity_update)(double* v, const double* x, const double* p, const double* g,
                            const double* r1, const double* r2, double omega, double c1,
                            double c2, std::size_t n);
    /// x += v
    void (*add_inplace)(double* x, const double* v, std::size_t n);
};

bool backend_supported(Backend backend) noexcept;

/// Throws std::invalid_argument if the backend is not compiled in or the CPU lacks it.
const KernelTable& kernels_for(Backend backend);

/// Best supported backend, unless overridden with SAVL_SIMD=scalar|avx2|neon
/// or set_backend().
Backend active_backend() noexcept;
void set_backend(Backend backend);
const KernelTable& kernels() noexcept;

std::string_view backend_name(Backend backend) noexcept;

inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
    return kernels().dot(a.data(), b.data(), a.size());
}

inline double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
    return kernels().squared_distance(a.data(), b.data(), a.size());
}

namespace detail {
extern const KernelTable scalar_table;
#if defined(SAVL_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(SAVL_HAVE_NEON)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace savl::simd
