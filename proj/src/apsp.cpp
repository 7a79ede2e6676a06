#include "metric_repair/apsp.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "metric_repair/errors.hpp"
#include "metric_repair/simd/kernels.hpp"

namespace metric_repair {
namespace {

void floyd_warshall(const WeightedGraph& g, std::span<const Units> edge_units, DistanceTable& dist) {
    const std::size_t n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) dist.at(v, v) = 0;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Units w = edge_units[id];
        if (w >= kUnreachable) continue;
        const Edge& e = g.edge(id);
        dist.at(e.u, e.v) = std::min(dist.at(e.u, e.v), w);
        dist.at(e.v, e.u) = std::min(dist.at(e.v, e.u), w);
    }
    const simd::RelaxRowFn relax = simd::active_kernels().relax_row;
    for (Vertex via = 0; via < n; ++via) {
        const Units* via_row = dist.row(via).data();
        for (Vertex i = 0; i < n; ++i) {
            const Units d = dist.at(i, via);
            if (d >= kUnreachable || i == via) continue;
            relax(dist.row(i).data(), via_row, d, n);
        }
    }
}

void dijkstra_all(const WeightedGraph& g, std::span<const Units> edge_units, DistanceTable& dist) {
    const std::size_t n = g.vertex_count();
    using Item = std::pair<Units, Vertex>;
    for (Vertex s = 0; s < n; ++s) {
        std::span<Units> d = dist.row(s);
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        d[s] = 0;
        heap.emplace(0, s);
        while (!heap.empty()) {
            const auto [du, u] = heap.top();
            heap.pop();
            if (du != d[u]) continue;
            for (const Incidence& inc : g.neighbors(u)) {
                const Units w = edge_units[inc.edge];
                if (w >= kUnreachable) continue;
                const Units candidate = du + w;
                if (candidate < d[inc.to]) {
                    d[inc.to] = candidate;
                    heap.emplace(candidate, inc.to);
                }
            }
        }
    }
}

/// BFS over tight edges from `source`: hops[v] = fewest edges on a shortest
/// source-v path, or kNoVertex when unreachable.
void tight_hops(const WeightedGraph& g, std::span<const Units> edge_units, std::span<const Units> dist_row,
                Vertex source, std::vector<std::size_t>& hops, std::vector<Vertex>& queue) {
    hops.assign(g.vertex_count(), kNoVertex);
    queue.clear();
    hops[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (const Incidence& inc : g.neighbors(u)) {
            const Units w = edge_units[inc.edge];
            if (w >= kUnreachable || hops[inc.to] != kNoVertex) continue;
            if (dist_row[u] + w == dist_row[inc.to]) {
                hops[inc.to] = hops[u] + 1;
                queue.push_back(inc.to);
            }
        }
    }
}

Vertex tight_parent(const WeightedGraph& g, std::span<const Units> edge_units, std::span<const Units> dist_row,
                    const std::vector<std::size_t>& hops, Vertex v) {
    for (const Incidence& inc : g.neighbors(v)) {  // sorted by id
        const Units w = edge_units[inc.edge];
        if (w >= kUnreachable || hops[inc.to] == kNoVertex) continue;
        if (hops[inc.to] + 1 == hops[v] && dist_row[inc.to] + w == dist_row[v]) return inc.to;
    }
    return kNoVertex;
}

} // namespace

ApspEngine select_engine(std::size_t vertex_count, std::size_t edge_count) noexcept {
    return 4 * edge_count > vertex_count * vertex_count ? ApspEngine::DenseRelaxation : ApspEngine::SparseSearch;
}

DistanceTable shortest_distances(const WeightedGraph& g, std::span<const Units> edge_units, ApspEngine engine) {
    if (edge_units.size() != g.edge_count()) throw PreconditionError("edge weight override has the wrong size");
    if (engine == ApspEngine::Auto) engine = select_engine(g.vertex_count(), g.edge_count());
    DistanceTable dist(g.vertex_count());
    if (engine == ApspEngine::DenseRelaxation) {
        floyd_warshall(g, edge_units, dist);
    } else {
        dijkstra_all(g, edge_units, dist);
    }
    return dist;
}

DistanceTable shortest_distances(const WeightedGraph& g, ApspEngine engine) {
    const std::vector<Units> units = g.weight_units();
    return shortest_distances(g, units, engine);
}

std::optional<Weight> ApspResult::distance(Vertex u, Vertex v) const noexcept {
    if (!dist_.reachable(u, v)) return std::nullopt;
    return Weight{dist_.at(u, v)};
}

std::vector<Vertex> ApspResult::path(Vertex source, Vertex target) const {
    if (!dist_.reachable(source, target)) return {};
    std::vector<Vertex> reversed{target};
    for (Vertex v = target; v != source;) {
        v = parent(source, v);
        reversed.push_back(v);
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

ApspResult apsp(const WeightedGraph& g, ApspEngine engine) {
    const std::vector<Units> units = g.weight_units();
    DistanceTable dist = shortest_distances(g, units, engine);
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> parent(n * n, kNoVertex);
    std::vector<std::size_t> hops;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        const std::span<const Units> row = std::as_const(dist).row(s);
        tight_hops(g, units, row, s, hops, queue);
        for (Vertex v = 0; v < n; ++v) {
            if (v == s || hops[v] == kNoVertex) continue;
            parent[s * n + v] = tight_parent(g, units, row, hops, v);
        }
    }
    return ApspResult(std::move(dist), std::move(parent));
}

std::vector<Vertex> canonical_path(const WeightedGraph& g, std::span<const Units> edge_units,
                                   const DistanceTable& dist, Vertex source, Vertex target) {
    if (!dist.reachable(source, target)) return {};
    std::vector<std::size_t> hops;
    std::vector<Vertex> queue;
    const std::span<const Units> row = dist.row(source);
    tight_hops(g, edge_units, row, source, hops, queue);
    std::vector<Vertex> reversed{target};
    for (Vertex v = target; v != source;) {
        v = tight_parent(g, edge_units, row, hops, v);
        reversed.push_back(v);
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

} // namespace metric_repair
