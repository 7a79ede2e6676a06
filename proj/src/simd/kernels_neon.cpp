#include <arm_neon.h>

#include <algorithm>
#include <limits>

#include "metric_repair/simd/kernels.hpp"

namespace metric_repair::simd::detail {
namespace {

void relax_row_neon(Units* row, const Units* via_row, Units via, std::size_t count) {
    const int64x2_t offset = vdupq_n_s64(via);
    std::size_t j = 0;
    for (; j + 2 <= count; j += 2) {
        const int64x2_t current = vld1q_s64(row + j);
        const int64x2_t candidate = vaddq_s64(offset, vld1q_s64(via_row + j));
        const uint64x2_t shorter = vcgtq_s64(current, candidate);
        vst1q_s64(row + j, vbslq_s64(shorter, candidate, current));
    }
    for (; j < count; ++j) {
        const Units candidate = via + via_row[j];
        if (candidate < row[j]) row[j] = candidate;
    }
}

Units max_difference_neon(const Units* a, const Units* b, std::size_t count) {
    int64x2_t best = vdupq_n_s64(std::numeric_limits<Units>::min());
    std::size_t j = 0;
    for (; j + 2 <= count; j += 2) {
        const int64x2_t diff = vsubq_s64(vld1q_s64(a + j), vld1q_s64(b + j));
        best = vbslq_s64(vcgtq_s64(diff, best), diff, best);
    }
    Units result = std::max(vgetq_lane_s64(best, 0), vgetq_lane_s64(best, 1));
    for (; j < count; ++j) result = std::max(result, a[j] - b[j]);
    return result;
}

} // namespace

extern const KernelTable kNeonTable{Level::Neon, &relax_row_neon, &max_difference_neon};

} // namespace metric_repair::simd::detail
