#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "metric_repair/apsp.hpp"
#include "metric_repair/detect.hpp"
#include "metric_repair/graph.hpp"

namespace metric_repair {

/// A set of edges of a specific graph, held as sorted unique edge ids.
class Support {
public:
    Support() = default;
    explicit Support(std::vector<EdgeId> ids);

    /// Throws PreconditionError for pairs that are not edges of g.
    static Support from_pairs(const WeightedGraph& g, std::span<const VertexPair> pairs);

    [[nodiscard]] std::span<const EdgeId> ids() const noexcept { return ids_; }
    [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }
    [[nodiscard]] bool empty() const noexcept { return ids_.empty(); }
    [[nodiscard]] bool contains(EdgeId id) const noexcept;
    [[nodiscard]] std::vector<VertexPair> pairs(const WeightedGraph& g) const;

    friend bool operator==(const Support&, const Support&) = default;

private:
    std::vector<EdgeId> ids_;
};

/// Decrease-only repair: every edge drops to the shortest distance between
/// its endpoints. The support is the unique minimum and the delta is
/// ℓp-minimal for every p >= 1.
RepairDelta dmr(const WeightedGraph& g);

enum class Rejection {
    ChangedOutsideSupport,
    DecreasedInIncreaseMode,
};

std::string_view to_string(Rejection reason) noexcept;

class VerifierOutcome {
public:
    static VerifierOutcome accept(RepairDelta delta) { return VerifierOutcome(std::move(delta), std::nullopt); }
    static VerifierOutcome reject(Rejection reason) { return VerifierOutcome(RepairDelta{}, reason); }

    [[nodiscard]] bool accepted() const noexcept { return !rejection_.has_value(); }
    /// Valid only when accepted.
    [[nodiscard]] const RepairDelta& delta() const noexcept { return delta_; }
    [[nodiscard]] std::optional<Rejection> rejection() const noexcept { return rejection_; }

private:
    VerifierOutcome(RepairDelta delta, std::optional<Rejection> rejection)
        : delta_(std::move(delta)), rejection_(rejection) {}

    RepairDelta delta_;
    std::optional<Rejection> rejection_;
};

/// Decides whether any valid repair has support inside `support` and, if so,
/// returns the canonical one: support edges are raised to the maximum edge
/// weight, then every edge takes its shortest-path distance. The repair is
/// accepted iff no edge outside the support changed (and, for IncreaseOnly,
/// no support edge went below its original weight).
///
/// Reuses its buffers across calls on the same graph.
class SupportVerifier {
public:
    explicit SupportVerifier(const WeightedGraph& g);

    VerifierOutcome check(std::span<const EdgeId> support, Omega omega);
    /// Same decision without building the delta.
    bool accepts(std::span<const EdgeId> support, Omega omega);

private:
    bool run(std::span<const EdgeId> support, Omega omega, Rejection& reason);

    const WeightedGraph* g_;
    std::vector<Units> original_;
    std::vector<Units> modified_;
    std::vector<bool> in_support_;
    DistanceTable dist_;
};

/// Throws PreconditionError for Omega::DecreaseOnly (use dmr).
VerifierOutcome verify_support(const WeightedGraph& g, const Support& support, Omega omega);

/// Broken cycles of a small graph, enumerated once for repeated cover
/// queries.
class BrokenCycleIndex {
public:
    BrokenCycleIndex(const WeightedGraph& g, std::size_t budget);

    /// General: every broken cycle has an edge in `support`.
    /// IncreaseOnly: every broken cycle has a bottom edge in `support`.
    [[nodiscard]] bool covers(const Support& support, Omega omega) const;
    [[nodiscard]] std::span<const BrokenCycle> cycles() const noexcept { return cycles_; }

private:
    std::vector<BrokenCycle> cycles_;
    std::size_t edge_count_;
};

/// Characterization of valid supports, checked by exhaustive cycle
/// enumeration. Throws EnumerationLimitError when n > budget and
/// PreconditionError for Omega::DecreaseOnly.
bool check_structure_theorem(const WeightedGraph& g, const Support& support, Omega omega,
                             std::size_t budget = kDefaultCycleBudget);

inline constexpr std::size_t kDefaultOracleEdgeLimit = 24;

struct OracleSolution {
    Support support;
    RepairDelta delta;
};

/// Minimum-cardinality repair by enumerating supports in order of size,
/// lexicographic within a size. Empty when nothing of size <= max_support
/// is accepted. Throws EnumerationLimitError when |E| > edge_limit.
std::optional<OracleSolution> oracle_opt(const WeightedGraph& g, Omega omega, std::size_t max_support,
                                         std::size_t edge_limit = kDefaultOracleEdgeLimit);

/// Reads METRIC_REPAIR_ORACLE_EDGE_LIMIT, falling back to the default.
std::size_t oracle_edge_limit_from_env();

} // namespace metric_repair
