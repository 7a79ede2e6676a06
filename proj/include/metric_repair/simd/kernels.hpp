#pragma once

#include <cstddef>
#include <string_view>

#include "metric_repair/weight.hpp"

/// Data-parallel inner loops shared by the solvers. Every instruction-set
/// variant must produce results identical to the scalar reference.
namespace metric_repair::simd {

enum class Level {
    Scalar,
    Avx2,
    Neon,
};

std::string_view to_string(Level level) noexcept;

/// row[j] = min(row[j], via + via_row[j]) for j in [0, count).
/// Requires via < kUnreachable and via_row[j] <= kUnreachable, so no sum
/// can overflow and unreachable entries stay >= kUnreachable.
using RelaxRowFn = void (*)(Units* row, const Units* via_row, Units via, std::size_t count);

/// max over j in [0, count) of (a[j] - b[j]); the minimum Units value when
/// count == 0.
using MaxDifferenceFn = Units (*)(const Units* a, const Units* b, std::size_t count);

struct KernelTable {
    Level level;
    RelaxRowFn relax_row;
    MaxDifferenceFn max_difference;
};

const KernelTable& scalar_kernels() noexcept;

/// nullptr when the variant is not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;

/// Best supported table, chosen once. The environment variable
/// METRIC_REPAIR_SIMD=scalar forces the reference kernels.
const KernelTable& active_kernels() noexcept;

} // namespace metric_repair::simd
