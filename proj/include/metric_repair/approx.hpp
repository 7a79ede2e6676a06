#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "metric_repair/exact.hpp"
#include "metric_repair/graph.hpp"

namespace metric_repair {

/// Complete-graph view: n x n symmetric, zero diagonal, nonnegative.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    /// Row-major values; throws PreconditionError when the invariants fail.
    DistanceMatrix(std::size_t n, std::vector<Units> values, int decimals = 0);

    /// Throws PreconditionError unless g is complete.
    static DistanceMatrix from_graph(const WeightedGraph& g);
    [[nodiscard]] WeightedGraph to_graph() const;

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] Units at(Vertex i, Vertex j) const noexcept { return values_[i * n_ + j]; }
    [[nodiscard]] std::span<const Units> row(Vertex i) const noexcept {
        return std::span<const Units>(values_).subspan(i * n_, n_);
    }
    [[nodiscard]] int decimals() const noexcept { return decimals_; }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Units> values_;
    int decimals_ = 0;
};

enum class RatioBound {
    L,
    LPlusOne,
};

struct ApproxReport {
    Support support;
    RepairDelta delta;
    std::size_t iterations = 0;  ///< shortest-path rounds (outer passes)
    bool accepted = true;        ///< false: the verifier rejected the support (delta empty)
    std::optional<RatioBound> ratio_bound;
    /// For the path-cover algorithms: per outer pass, the edge sets that were
    /// moved into the support, in processing order.
    std::vector<std::vector<std::vector<EdgeId>>> batches;
};

/// Short path cover for increase-only repair: every edge that is not its
/// own shortest path contributes that path's edges to the support; repeat on
/// the residual graph, then verify. |S| <= L * OPT.
ApproxReport spc(const WeightedGraph& g);

/// As spc, but each processed path also moves its closing edge into the
/// support and the result is verified as a general repair. |S| <= (L+1) OPT.
ApproxReport general_spc(const WeightedGraph& g);

/// Step one of the 5-cycle cover: a greedy cover holding a bottom edge of
/// every broken cycle with at most five edges.
Support short_cycle_cover(const DistanceMatrix& d);

/// The edges of every 4-cycle lying entirely in `cover`, found by pairing
/// vertex-disjoint cover edges that close through two more cover edges.
std::vector<VertexPair> chord4(const DistanceMatrix& d, const Support& cover);

/// Θ(n^5) cover of short broken cycles plus chord4, verified increase-only.
/// `accepted` reports the verifier's decision.
ApproxReport five_cycle_cover(const DistanceMatrix& d);

/// The increase-only sweep: for every column k and row i,
/// D[i][k] = max(D[i][k], max_{j<i} D[i][j] - D[j][k]), kept symmetric.
DistanceMatrix iomr_fixed_matrix(const DistanceMatrix& d);
RepairDelta iomr_fixed(const DistanceMatrix& d);

/// Matrix entries changed by a delta (both triangles of the matrix).
[[nodiscard]] inline std::size_t repaired_entry_count(const RepairDelta& delta) noexcept { return 2 * delta.size(); }

} // namespace metric_repair
