#include <cstdlib>
#include <string_view>

#include "metric_repair/simd/kernels.hpp"

namespace metric_repair::simd {

namespace detail {
#if defined(METRIC_REPAIR_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
#if defined(METRIC_REPAIR_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif
} // namespace detail

std::string_view to_string(Level level) noexcept {
    switch (level) {
    case Level::Scalar: return "scalar";
    case Level::Avx2: return "avx2";
    case Level::Neon: return "neon";
    }
    return "scalar";
}

const KernelTable* avx2_kernels() noexcept {
#if defined(METRIC_REPAIR_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &detail::kAvx2Table : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable* neon_kernels() noexcept {
#if defined(METRIC_REPAIR_HAVE_NEON)
    return &detail::kNeonTable;
#else
    return nullptr;
#endif
}

namespace {

const KernelTable& select_kernels() noexcept {
    if (const char* forced = std::getenv("METRIC_REPAIR_SIMD"); forced != nullptr && std::string_view(forced) == "scalar") {
        return scalar_kernels();
    }
    if (const KernelTable* table = avx2_kernels()) return *table;
    if (const KernelTable* table = neon_kernels()) return *table;
    return scalar_kernels();
}

} // namespace

const KernelTable& active_kernels() noexcept {
    static const KernelTable& table = select_kernels();
    return table;
}

} // namespace metric_repair::simd
