#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "metric_repair/graph.hpp"

namespace metric_repair {

enum class ApspEngine {
    Auto,             ///< dense when m > n^2 / 4, sparse otherwise
    DenseRelaxation,  ///< Floyd-Warshall over SIMD row relaxations
    SparseSearch,     ///< one Dijkstra search per source
};

[[nodiscard]] ApspEngine select_engine(std::size_t vertex_count, std::size_t edge_count) noexcept;

/// Row-major n x n distances in units; kUnreachable for disconnected pairs.
class DistanceTable {
public:
    DistanceTable() = default;
    explicit DistanceTable(std::size_t n) : n_(n), dist_(n * n, kUnreachable) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] Units at(Vertex u, Vertex v) const noexcept { return dist_[u * n_ + v]; }
    [[nodiscard]] Units& at(Vertex u, Vertex v) noexcept { return dist_[u * n_ + v]; }
    [[nodiscard]] bool reachable(Vertex u, Vertex v) const noexcept { return at(u, v) < kUnreachable; }
    [[nodiscard]] std::span<const Units> row(Vertex u) const noexcept {
        return std::span<const Units>(dist_).subspan(u * n_, n_);
    }
    [[nodiscard]] std::span<Units> row(Vertex u) noexcept { return std::span<Units>(dist_).subspan(u * n_, n_); }

    friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Units> dist_;
};

/// Exact shortest distances. `edge_units` overrides the graph's weights by
/// edge id; entries >= kUnreachable remove the edge.
DistanceTable shortest_distances(const WeightedGraph& g, std::span<const Units> edge_units,
                                 ApspEngine engine = ApspEngine::Auto);
DistanceTable shortest_distances(const WeightedGraph& g, ApspEngine engine = ApspEngine::Auto);

/// Distances plus one canonical shortest path per pair.
///
/// Among all shortest u-v paths the canonical one uses the fewest edges; the
/// predecessor of v is the smallest-id vertex that precedes v on such a
/// path. The choice depends only on the distances, so both engines yield
/// the same paths.
class ApspResult {
public:
    ApspResult() = default;
    ApspResult(DistanceTable dist, std::vector<Vertex> parent)
        : dist_(std::move(dist)), parent_(std::move(parent)) {}

    [[nodiscard]] const DistanceTable& distances() const noexcept { return dist_; }
    [[nodiscard]] std::optional<Weight> distance(Vertex u, Vertex v) const noexcept;
    /// Predecessor of v on the canonical path from `source`; kNoVertex for
    /// v == source or unreachable v.
    [[nodiscard]] Vertex parent(Vertex source, Vertex v) const noexcept { return parent_[source * dist_.size() + v]; }
    /// Vertex sequence source..target; empty when unreachable.
    [[nodiscard]] std::vector<Vertex> path(Vertex source, Vertex target) const;

private:
    DistanceTable dist_;
    std::vector<Vertex> parent_;
};

ApspResult apsp(const WeightedGraph& g, ApspEngine engine = ApspEngine::Auto);

/// Canonical shortest path for a single pair given precomputed distances
/// (same tie-breaking as ApspResult::path). `edge_units` as above.
std::vector<Vertex> canonical_path(const WeightedGraph& g, std::span<const Units> edge_units,
                                   const DistanceTable& dist, Vertex source, Vertex target);

} // namespace metric_repair
