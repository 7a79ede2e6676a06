#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "metric_repair/weight.hpp"

namespace metric_repair {

using Vertex = std::size_t;
using EdgeId = std::size_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Sign class of the allowed modifications.
enum class Omega {
    DecreaseOnly,
    IncreaseOnly,
    General,
};

std::string_view to_string(Omega omega) noexcept;
/// Accepts "decrease", "increase" and "general".
std::optional<Omega> parse_omega(std::string_view text) noexcept;
[[nodiscard]] bool sign_compatible(Omega omega, Units delta) noexcept;

/// Unordered vertex pair, stored with u < v.
struct VertexPair {
    Vertex u = 0;
    Vertex v = 0;

    static VertexPair of(Vertex a, Vertex b) noexcept { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

struct Edge {
    Vertex u = 0;  // u < v
    Vertex v = 0;
    Weight w;

    [[nodiscard]] VertexPair pair() const noexcept { return {u, v}; }
    [[nodiscard]] Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
};

struct Incidence {
    Vertex to = 0;
    EdgeId edge = 0;
};

/// Undirected simple graph with nonnegative exact weights. Edge ids are the
/// positions in the lexicographically sorted edge list; neighbor lists are
/// sorted by vertex id. Immutable after construction.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Throws PreconditionError on self-loops, duplicate pairs, out-of-range
    /// vertices, negative weights or a total weight above kMaxTotalUnits.
    WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges, int decimals = 0);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeId id) const noexcept { return edges_[id]; }
    [[nodiscard]] Weight weight(EdgeId id) const noexcept { return edges_[id].w; }
    [[nodiscard]] std::span<const Incidence> neighbors(Vertex v) const noexcept;

    /// kNoEdge when u and v are not adjacent (or u == v).
    [[nodiscard]] EdgeId find_edge(Vertex u, Vertex v) const noexcept;
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const noexcept { return find_edge(u, v) != kNoEdge; }

    [[nodiscard]] Weight max_weight() const noexcept { return max_weight_; }
    [[nodiscard]] bool is_complete() const noexcept { return 2 * edges_.size() == n_ * (n_ == 0 ? 0 : n_ - 1); }

    /// Number of fractional decimal digits the integer units represent.
    [[nodiscard]] int decimals() const noexcept { return decimals_; }

    /// Same topology with new weights (indexed by edge id).
    [[nodiscard]] WeightedGraph with_weights(std::span<const Units> units) const;
    [[nodiscard]] std::vector<Units> weight_units() const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

private:
    std::size_t n_ = 0;
    int decimals_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Incidence> adjacency_;
    std::vector<EdgeId> index_;
    Weight max_weight_;
};

struct DeltaEntry {
    Vertex u = 0;  // u < v
    Vertex v = 0;
    Units delta = 0;

    [[nodiscard]] VertexPair pair() const noexcept { return {u, v}; }
    friend bool operator==(const DeltaEntry&, const DeltaEntry&) = default;
};

/// Sparse symmetric modification W. Entries are sorted by pair, nonzero and
/// sign-compatible with `omega()`, so ‖W‖₀ == size().
class RepairDelta {
public:
    RepairDelta() = default;
    explicit RepairDelta(Omega omega) : omega_(omega) {}

    /// Normalizes pair orientation, sorts and drops zero entries. Throws
    /// PreconditionError on duplicate pairs, self pairs or sign violations.
    RepairDelta(Omega omega, std::vector<DeltaEntry> entries);

    [[nodiscard]] Omega omega() const noexcept { return omega_; }
    [[nodiscard]] std::span<const DeltaEntry> entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] Units at(Vertex u, Vertex v) const noexcept;
    [[nodiscard]] Units l1_norm() const noexcept;

    friend bool operator==(const RepairDelta&, const RepairDelta&) = default;

private:
    Omega omega_ = Omega::General;
    std::vector<DeltaEntry> entries_;
};

/// w'(e) = w(e) + d(e). Throws PreconditionError when the delta touches a
/// non-edge or drives a weight negative.
WeightedGraph apply_delta(const WeightedGraph& g, const RepairDelta& delta);

/// Flips every sign (and the decrease/increase class).
RepairDelta negate(const RepairDelta& delta);

/// Entrywise sum; the class is kept when both agree, otherwise General.
RepairDelta compose(const RepairDelta& a, const RepairDelta& b);

} // namespace metric_repair
