#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "metric_repair/graph.hpp"

namespace metric_repair {

/// A cycle whose top edge is strictly heavier than all other cycle edges
/// together. `cycle` runs from one endpoint of the top edge to the other
/// along the bottom edges; the closing pair (front, back) is the top edge.
struct BrokenCycleWitness {
    std::vector<Vertex> cycle;
    VertexPair top;

    friend bool operator==(const BrokenCycleWitness&, const BrokenCycleWitness&) = default;
};

/// Checks the witness invariants against g: at least three distinct
/// vertices, all cycle edges present, closing pair equals `top`, and the
/// strict broken-cycle inequality.
[[nodiscard]] bool is_valid_witness(const WeightedGraph& g, const BrokenCycleWitness& witness);

/// True iff every edge is a shortest path between its endpoints.
[[nodiscard]] bool is_metric(const WeightedGraph& g);

/// The lexicographically first edge uv with dist(u, v) < w(u, v), closed by
/// its canonical shortest path. Empty for metric graphs.
[[nodiscard]] std::optional<BrokenCycleWitness> find_broken_witness(const WeightedGraph& g);

/// A broken triangle identified by edge ids.
struct TriangleRecord {
    std::array<Vertex, 3> vertices;  // ascending
    EdgeId top;
    std::array<EdgeId, 2> bottoms;
};

/// All broken triangles, ordered by their ascending vertex triple.
[[nodiscard]] std::vector<TriangleRecord> enumerate_broken_triangles(const WeightedGraph& g);
[[nodiscard]] std::vector<BrokenCycleWitness> broken_triangles(const WeightedGraph& g);

/// Default guard for exhaustive simple-cycle enumeration.
inline constexpr std::size_t kDefaultCycleBudget = 10;

/// Calls `visit(vertices, edges)` once per simple cycle (each cycle in one
/// canonical rotation and direction). Throws EnumerationLimitError when
/// n > budget.
void for_each_simple_cycle(const WeightedGraph& g, std::size_t budget,
                           const std::function<void(std::span<const Vertex>, std::span<const EdgeId>)>& visit);

struct BrokenCycle {
    std::vector<EdgeId> edges;  // sorted
    EdgeId top;
};

/// Every broken simple cycle, by exhaustive enumeration.
[[nodiscard]] std::vector<BrokenCycle> enumerate_broken_cycles(const WeightedGraph& g, std::size_t budget);

/// Number of edges (L + 1) of the longest broken cycle; empty when metric.
[[nodiscard]] std::optional<std::size_t> longest_broken_cycle_len(const WeightedGraph& g,
                                                                  std::size_t budget = kDefaultCycleBudget);

/// A perfect elimination ordering when g is chordal (maximum cardinality
/// search followed by a PEO check), otherwise empty.
[[nodiscard]] std::optional<std::vector<Vertex>> is_chordal(const WeightedGraph& g);

} // namespace metric_repair
