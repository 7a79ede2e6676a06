#include "metric_repair/detect.hpp"

#include <algorithm>

#include "metric_repair/apsp.hpp"
#include "metric_repair/errors.hpp"

namespace metric_repair {

bool is_valid_witness(const WeightedGraph& g, const BrokenCycleWitness& witness) {
    const std::vector<Vertex>& cycle = witness.cycle;
    if (cycle.size() < 3) return false;
    std::vector<Vertex> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (VertexPair::of(cycle.front(), cycle.back()) != witness.top) return false;
    const EdgeId top = g.find_edge(witness.top.u, witness.top.v);
    if (top == kNoEdge) return false;
    Units bottom_sum = 0;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
        const EdgeId id = g.find_edge(cycle[i], cycle[i + 1]);
        if (id == kNoEdge) return false;
        bottom_sum += g.weight(id).units();
    }
    return g.weight(top).units() > bottom_sum;
}

bool is_metric(const WeightedGraph& g) {
    const DistanceTable dist = shortest_distances(g);
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return dist.at(e.u, e.v) == e.w.units(); });
}

std::optional<BrokenCycleWitness> find_broken_witness(const WeightedGraph& g) {
    const std::vector<Units> units = g.weight_units();
    const DistanceTable dist = shortest_distances(g, units);
    for (const Edge& e : g.edges()) {
        if (dist.at(e.u, e.v) < e.w.units()) {
            return BrokenCycleWitness{canonical_path(g, units, dist, e.u, e.v), e.pair()};
        }
    }
    return std::nullopt;
}

std::vector<TriangleRecord> enumerate_broken_triangles(const WeightedGraph& g) {
    std::vector<TriangleRecord> out;
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (const Incidence& ab : g.neighbors(a)) {
            const Vertex b = ab.to;
            if (b <= a) continue;
            // Common neighbors c > b via a sorted merge.
            const auto na = g.neighbors(a);
            const auto nb = g.neighbors(b);
            auto ia = na.begin();
            auto ib = nb.begin();
            while (ia != na.end() && ib != nb.end()) {
                if (ia->to < ib->to) {
                    ++ia;
                } else if (ib->to < ia->to) {
                    ++ib;
                } else {
                    const Vertex c = ia->to;
                    if (c > b) {
                        const std::array<EdgeId, 3> ids{ab.edge, ia->edge, ib->edge};  // ab, ac, bc
                        const Units wab = g.weight(ids[0]).units();
                        const Units wac = g.weight(ids[1]).units();
                        const Units wbc = g.weight(ids[2]).units();
                        if (wab > wac + wbc) {
                            out.push_back({{a, b, c}, ids[0], {ids[1], ids[2]}});
                        } else if (wac > wab + wbc) {
                            out.push_back({{a, b, c}, ids[1], {ids[0], ids[2]}});
                        } else if (wbc > wab + wac) {
                            out.push_back({{a, b, c}, ids[2], {ids[0], ids[1]}});
                        }
                    }
                    ++ia;
                    ++ib;
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const TriangleRecord& x, const TriangleRecord& y) { return x.vertices < y.vertices; });
    return out;
}

std::vector<BrokenCycleWitness> broken_triangles(const WeightedGraph& g) {
    std::vector<BrokenCycleWitness> out;
    for (const TriangleRecord& t : enumerate_broken_triangles(g)) {
        const Edge& top = g.edge(t.top);
        Vertex apex = t.vertices[0];
        for (Vertex v : t.vertices) {
            if (v != top.u && v != top.v) apex = v;
        }
        out.push_back({{top.u, apex, top.v}, top.pair()});
    }
    return out;
}

void for_each_simple_cycle(const WeightedGraph& g, std::size_t budget,
                           const std::function<void(std::span<const Vertex>, std::span<const EdgeId>)>& visit) {
    const std::size_t n = g.vertex_count();
    if (n > budget) {
        throw EnumerationLimitError("cycle enumeration refused: " + std::to_string(n) + " vertices exceeds budget " +
                                    std::to_string(budget));
    }
    std::vector<Vertex> path;
    std::vector<EdgeId> path_edges;
    std::vector<bool> on_path(n, false);

    // Cycles are rooted at their smallest vertex; the direction is fixed by
    // requiring path[1] < path.back().
    std::function<void(Vertex, Vertex)> extend = [&](Vertex root, Vertex u) {
        for (const Incidence& inc : g.neighbors(u)) {
            const Vertex x = inc.to;
            if (x == root && path.size() >= 3 && path[1] < path.back()) {
                path_edges.push_back(inc.edge);
                visit(path, path_edges);
                path_edges.pop_back();
                continue;
            }
            if (x <= root || on_path[x]) continue;
            on_path[x] = true;
            path.push_back(x);
            path_edges.push_back(inc.edge);
            extend(root, x);
            path_edges.pop_back();
            path.pop_back();
            on_path[x] = false;
        }
    };
    for (Vertex root = 0; root < n; ++root) {
        on_path[root] = true;
        path.assign(1, root);
        path_edges.clear();
        extend(root, root);
        on_path[root] = false;
    }
}

std::vector<BrokenCycle> enumerate_broken_cycles(const WeightedGraph& g, std::size_t budget) {
    std::vector<BrokenCycle> out;
    for_each_simple_cycle(g, budget, [&](std::span<const Vertex>, std::span<const EdgeId> edges) {
        Units total = 0;
        EdgeId heaviest = edges.front();
        for (EdgeId id : edges) {
            total += g.weight(id).units();
            if (g.weight(id) > g.weight(heaviest)) heaviest = id;
        }
        const Units top = g.weight(heaviest).units();
        if (top > total - top) {
            BrokenCycle cycle{{edges.begin(), edges.end()}, heaviest};
            std::sort(cycle.edges.begin(), cycle.edges.end());
            out.push_back(std::move(cycle));
        }
    });
    return out;
}

std::optional<std::size_t> longest_broken_cycle_len(const WeightedGraph& g, std::size_t budget) {
    std::optional<std::size_t> longest;
    for (const BrokenCycle& c : enumerate_broken_cycles(g, budget)) {
        longest = std::max(longest.value_or(0), c.edges.size());
    }
    return longest;
}

std::optional<std::vector<Vertex>> is_chordal(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    // Maximum cardinality search; the reverse visit order is a PEO iff g is chordal.
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<Vertex> visit_order;
    visit_order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = kNoVertex;
        for (Vertex v = 0; v < n; ++v) {
            if (!visited[v] && (best == kNoVertex || weight[v] > weight[best])) best = v;
        }
        visited[best] = true;
        visit_order.push_back(best);
        for (const Incidence& inc : g.neighbors(best)) {
            if (!visited[inc.to]) ++weight[inc.to];
        }
    }
    std::vector<Vertex> order(visit_order.rbegin(), visit_order.rend());
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

    // For each v, its later neighbors minus the earliest one (its parent)
    // must all be adjacent to that parent.
    for (Vertex v : order) {
        Vertex parent = kNoVertex;
        for (const Incidence& inc : g.neighbors(v)) {
            if (position[inc.to] > position[v] && (parent == kNoVertex || position[inc.to] < position[parent])) {
                parent = inc.to;
            }
        }
        if (parent == kNoVertex) continue;
        for (const Incidence& inc : g.neighbors(v)) {
            if (position[inc.to] > position[v] && inc.to != parent && !g.has_edge(parent, inc.to)) return std::nullopt;
        }
    }
    return order;
}

} // namespace metric_repair
