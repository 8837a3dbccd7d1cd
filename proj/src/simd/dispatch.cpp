#include "savl/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace savl::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(SAVL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend best_backend() noexcept {
    if (const char* forced = std::getenv("SAVL_SIMD")) {
        const std::string name(forced);
        if (name == "scalar") return Backend::Scalar;
        if (name == "avx2" && backend_supported(Backend::Avx2)) return Backend::Avx2;
        if (name == "neon" && backend_supported(Backend::Neon)) return Backend::Neon;
    }
    if (backend_supported(Backend::Avx2)) return Backend::Avx2;
    if (backend_supported(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

std::atomic<Backend>& current() noexcept {
    static std::atomic<Backend> backend{best_backend()};
    return backend;
}

}  // namespace

bool backend_supported(Backend backend) noexcept {
    switch (backend) {
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
        return cpu_has_avx2();
    case Backend::Neon:
#if defined(SAVL_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

const KernelTable& kernels_for(Backend backend) {
    if (!backend_supported(backend)) {
        throw std::invalid_argument("SIMD backend not available: " +
                                    std::string(backend_name(backend)));
    }
    switch (backend) {
#if defined(SAVL_HAVE_AVX2)
    case Backend::Avx2:
        return detail::avx2_table;
#endif
#if defined(SAVL_HAVE_NEON)
    case Backend::Neon:
        return detail::neon_table;
#endif
    default:
        return detail::scalar_table;
    }
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
    kernels_for(backend);  // validates
    current().store(backend, std::memory_order_relaxed);
}

const KernelTable& kernels() noexcept {
    switch (active_backend()) {
#if defined(SAVL_HAVE_AVX2)
    case Backend::Avx2:
        return detail::avx2_table;
#endif
#if defined(SAVL_HAVE_NEON)
    case Backend::Neon:
        return detail::neon_table;
#endif
    default:
        return detail::scalar_table;
    }
}

std::string_view backend_name(Backend backend) noexcept {
    switch (backend) {
    case Backend::Scalar:
        return "scalar";
    case Backend::Avx2:
        return "avx2";
    case Backend::Neon:
        return "neon";
    }
    return "unknown";
}

}  // namespace savl::simd
