#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>

#include "metric_repair/exact.hpp"
#include "metric_repair/fpt.hpp"
#include "metric_repair/graph.hpp"

namespace metric_repair {

enum class Algorithm {
    Dmr,
    Fpt,
    Spc,
    Gspc,
    FiveCycleCover,
    Iomr,
    Oracle,
};

std::string_view to_string(Algorithm algo) noexcept;
/// dmr, fpt, spc, gspc, 5cc (or fivecc), iomr, oracle. Throws ParseError.
Algorithm parse_algorithm(std::string_view text);

/// dmr: decrease. spc, 5cc, iomr: increase. gspc, fpt: increase or general.
/// oracle: any (decrease is answered by dmr, which is optimal there).
bool compatible(Algorithm algo, Omega omega) noexcept;

struct RunOptions {
    std::size_t oracle_edge_limit = kDefaultOracleEdgeLimit;
    std::size_t oracle_max_support = std::numeric_limits<std::size_t>::max();
};

struct RepairReport {
    Algorithm algo = Algorithm::Dmr;
    Omega omega = Omega::General;
    /// False when the algorithm produced no repair of the requested class
    /// (oracle over budget, or a general-SPC repair that needs a decrease
    /// under increase-only).
    bool found = false;
    Support support;
    RepairDelta delta;
    std::size_t iterations = 0;
    double time_ms = 0.0;
    bool is_metric_after = false;
    std::optional<FptStats> fpt_stats;
};

/// Dispatches, times and validates: the repaired graph must be metric and
/// every entry must respect omega (std::logic_error otherwise).
/// Throws PreconditionError on an incompatible omega or an input the
/// algorithm does not accept.
RepairReport run_algo(const WeightedGraph& g, Omega omega, Algorithm algo, const RunOptions& options = {});

} // namespace metric_repair
