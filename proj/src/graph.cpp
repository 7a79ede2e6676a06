#include "metric_repair/graph.hpp"

#include <algorithm>
#include <string>

#include "metric_repair/errors.hpp"

namespace metric_repair {

std::string format_units(Units units, int decimals) {
    const bool negative = units < 0;
    // Magnitudes are bounded by kMaxTotalUnits, so negation cannot overflow.
    std::string digits = std::to_string(negative ? -units : units);
    if (decimals > 0) {
        if (digits.size() <= static_cast<std::size_t>(decimals)) {
            digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(decimals), 1, '.');
    }
    return negative ? "-" + digits : digits;
}

std::string_view to_string(Omega omega) noexcept {
    switch (omega) {
    case Omega::DecreaseOnly: return "decrease";
    case Omega::IncreaseOnly: return "increase";
    case Omega::General: return "general";
    }
    return "general";
}

std::optional<Omega> parse_omega(std::string_view text) noexcept {
    if (text == "decrease") return Omega::DecreaseOnly;
    if (text == "increase") return Omega::IncreaseOnly;
    if (text == "general") return Omega::General;
    return std::nullopt;
}

bool sign_compatible(Omega omega, Units delta) noexcept {
    switch (omega) {
    case Omega::DecreaseOnly: return delta <= 0;
    case Omega::IncreaseOnly: return delta >= 0;
    case Omega::General: return true;
    }
    return false;
}

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges, int decimals)
    : n_(vertex_count), decimals_(decimals), edges_(std::move(edges)) {
    if (decimals < 0) throw PreconditionError("negative decimal scale");
    Units total = 0;
    for (Edge& e : edges_) {
        if (e.u == e.v) throw PreconditionError("self-loop on vertex " + std::to_string(e.u));
        if (e.u >= n_ || e.v >= n_) throw PreconditionError("edge endpoint out of range");
        if (e.w.units() < 0) throw PreconditionError("negative edge weight");
        if (e.u > e.v) std::swap(e.u, e.v);
        total += e.w.units();
        if (total > kMaxTotalUnits) throw PreconditionError("total edge weight exceeds the supported range");
        max_weight_ = std::max(max_weight_, e.w);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.pair() < b.pair(); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].pair() == edges_[i].pair()) {
            throw PreconditionError("duplicate edge " + std::to_string(edges_[i].u) + " " + std::to_string(edges_[i].v));
        }
    }

    index_.assign(n_ * n_, kNoEdge);
    std::vector<std::size_t> degree(n_, 0);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        index_[e.u * n_ + e.v] = id;
        index_[e.v * n_ + e.u] = id;
        ++degree[e.u];
        ++degree[e.v];
    }
    offsets_.assign(n_ + 1, 0);
    for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    adjacency_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted by (u, v): appending in that order keeps every
    // neighbor list sorted for the lower endpoint; sort to cover both.
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        adjacency_[fill[e.u]++] = {e.v, id};
        adjacency_[fill[e.v]++] = {e.u, id};
    }
    for (Vertex v = 0; v < n_; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
                  [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
    }
}

std::span<const Incidence> WeightedGraph::neighbors(Vertex v) const noexcept {
    return std::span<const Incidence>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

EdgeId WeightedGraph::find_edge(Vertex u, Vertex v) const noexcept {
    if (u >= n_ || v >= n_) return kNoEdge;
    return index_[u * n_ + v];
}

WeightedGraph WeightedGraph::with_weights(std::span<const Units> units) const {
    if (units.size() != edges_.size()) throw PreconditionError("weight vector size does not match edge count");
    std::vector<Edge> edges = edges_;
    for (EdgeId id = 0; id < edges.size(); ++id) edges[id].w = Weight{units[id]};
    return WeightedGraph(n_, std::move(edges), decimals_);
}

std::vector<Units> WeightedGraph::weight_units() const {
    std::vector<Units> units(edges_.size());
    for (EdgeId id = 0; id < edges_.size(); ++id) units[id] = edges_[id].w.units();
    return units;
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.n_ != b.n_ || a.decimals_ != b.decimals_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        if (a.edges_[i].pair() != b.edges_[i].pair() || a.edges_[i].w != b.edges_[i].w) return false;
    }
    return true;
}

RepairDelta::RepairDelta(Omega omega, std::vector<DeltaEntry> entries) : omega_(omega) {
    for (DeltaEntry& e : entries) {
        if (e.u == e.v) throw PreconditionError("delta entry on a self pair");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!sign_compatible(omega, e.delta)) {
            throw PreconditionError("delta entry " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                    " violates the " + std::string(to_string(omega)) + " sign class");
        }
    }
    std::erase_if(entries, [](const DeltaEntry& e) { return e.delta == 0; });
    std::sort(entries.begin(), entries.end(), [](const DeltaEntry& a, const DeltaEntry& b) { return a.pair() < b.pair(); });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i - 1].pair() == entries[i].pair()) throw PreconditionError("duplicate delta entry");
    }
    entries_ = std::move(entries);
}

Units RepairDelta::at(Vertex u, Vertex v) const noexcept {
    const VertexPair key = VertexPair::of(u, v);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const DeltaEntry& e, const VertexPair& p) { return e.pair() < p; });
    return it != entries_.end() && it->pair() == key ? it->delta : 0;
}

Units RepairDelta::l1_norm() const noexcept {
    Units total = 0;
    for (const DeltaEntry& e : entries_) total += e.delta < 0 ? -e.delta : e.delta;
    return total;
}

WeightedGraph apply_delta(const WeightedGraph& g, const RepairDelta& delta) {
    std::vector<Units> units = g.weight_units();
    for (const DeltaEntry& e : delta.entries()) {
        const EdgeId id = g.find_edge(e.u, e.v);
        if (id == kNoEdge) {
            throw PreconditionError("delta touches non-edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        }
        units[id] += e.delta;
        if (units[id] < 0) {
            throw PreconditionError("delta drives edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " negative");
        }
    }
    return g.with_weights(units);
}

RepairDelta negate(const RepairDelta& delta) {
    Omega omega = delta.omega();
    if (omega == Omega::DecreaseOnly) {
        omega = Omega::IncreaseOnly;
    } else if (omega == Omega::IncreaseOnly) {
        omega = Omega::DecreaseOnly;
    }
    std::vector<DeltaEntry> entries(delta.entries().begin(), delta.entries().end());
    for (DeltaEntry& e : entries) e.delta = -e.delta;
    return RepairDelta(omega, std::move(entries));
}

RepairDelta compose(const RepairDelta& a, const RepairDelta& b) {
    std::vector<DeltaEntry> merged;
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() || ib != b.entries().end()) {
        if (ib == b.entries().end() || (ia != a.entries().end() && ia->pair() < ib->pair())) {
            merged.push_back(*ia++);
        } else if (ia == a.entries().end() || ib->pair() < ia->pair()) {
            merged.push_back(*ib++);
        } else {
            merged.push_back({ia->u, ia->v, ia->delta + ib->delta});
            ++ia;
            ++ib;
        }
    }
    const Omega omega = a.omega() == b.omega() ? a.omega() : Omega::General;
    return RepairDelta(omega, std::move(merged));
}

} // namespace metric_repair
