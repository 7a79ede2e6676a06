#include <algorithm>
#include <limits>

#include "metric_repair/simd/kernels.hpp"

namespace metric_repair::simd {
namespace {

void relax_row_scalar(Units* row, const Units* via_row, Units via, std::size_t count) {
    for (std::size_t j = 0; j < count; ++j) {
        const Units candidate = via + via_row[j];
        if (candidate < row[j]) row[j] = candidate;
    }
}

Units max_difference_scalar(const Units* a, const Units* b, std::size_t count) {
    Units best = std::numeric_limits<Units>::min();
    for (std::size_t j = 0; j < count; ++j) best = std::max(best, a[j] - b[j]);
    return best;
}

constexpr KernelTable kScalar{Level::Scalar, &relax_row_scalar, &max_difference_scalar};

} // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

} // namespace metric_repair::simd
