#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace metric_repair {

/// Fixed-point integer units. A graph read from text with up to `d`
/// fractional digits stores every weight multiplied by 10^d, so all
/// comparisons and sums are exact.
using Units = std::int64_t;

/// Upper bound on the sum of all edge weights of a graph. Any simple path
/// therefore stays below `kUnreachable` and two path lengths can be added
/// without overflow.
inline constexpr Units kMaxTotalUnits = Units{1} << 60;

/// Distance marker for disconnected pairs (strictly above every path length).
inline constexpr Units kUnreachable = Units{1} << 61;

/// Nonnegative exact edge weight.
class Weight {
public:
    constexpr Weight() noexcept = default;
    constexpr explicit Weight(Units units) noexcept : units_(units) {}

    [[nodiscard]] constexpr Units units() const noexcept { return units_; }

    friend constexpr auto operator<=>(Weight, Weight) noexcept = default;
    friend constexpr Weight operator+(Weight a, Weight b) noexcept { return Weight{a.units_ + b.units_}; }

private:
    Units units_ = 0;
};

/// Renders `units` scaled by 10^-decimals, e.g. (-25, 1) -> "-2.5".
/// Exactly `decimals` fractional digits are printed.
std::string format_units(Units units, int decimals);

} // namespace metric_repair
