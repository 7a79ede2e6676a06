// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "metric_repair/simd/kernels.hpp"

namespace metric_repair::simd::detail {
namespace {

void relax_row_avx2(Units* row, const Units* via_row, Units via, std::size_t count) {
    const __m256i offset = _mm256_set1_epi64x(via);
    std::size_t j = 0;
    for (; j + 4 <= count; j += 4) {
        const __m256i current = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
        const __m256i candidate =
            _mm256_add_epi64(offset, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(via_row + j)));
        const __m256i shorter = _mm256_cmpgt_epi64(current, candidate);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + j), _mm256_blendv_epi8(current, candidate, shorter));
    }
    for (; j < count; ++j) {
        const Units candidate = via + via_row[j];
        if (candidate < row[j]) row[j] = candidate;
    }
}

Units max_difference_avx2(const Units* a, const Units* b, std::size_t count) {
    __m256i best = _mm256_set1_epi64x(std::numeric_limits<Units>::min());
    std::size_t j = 0;
    for (; j + 4 <= count; j += 4) {
        const __m256i diff = _mm256_sub_epi64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + j)),
                                              _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j)));
        best = _mm256_blendv_epi8(best, diff, _mm256_cmpgt_epi64(diff, best));
    }
    alignas(32) Units lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
    Units result = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    for (; j < count; ++j) result = std::max(result, a[j] - b[j]);
    return result;
}

} // namespace

extern const KernelTable kAvx2Table{Level::Avx2, &relax_row_avx2, &max_difference_avx2};

} // namespace metric_repair::simd::detail
