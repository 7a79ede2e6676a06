#pragma once

// Test-side generators and brute-force oracles. Nothing here calls the
// library's solvers; the graph type is the only shared piece.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "metric_repair/graph.hpp"

namespace mrtest {

using namespace metric_repair;

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, unsigned percent, Units max_w) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (draw(rng, 100) < percent) edges.push_back({u, v, Weight{static_cast<Units>(draw(rng, max_w + 1))}});
        }
    }
    return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph random_complete(std::mt19937_64& rng, std::size_t n, Units max_w) {
    return random_graph(rng, n, 100, max_w);
}

/// At most `max_edges` edges; keeps drawing until the cap holds.
inline WeightedGraph random_capped(std::mt19937_64& rng, std::size_t n, std::size_t max_edges, Units max_w) {
    while (true) {
        const unsigned percent = draw(rng, 2) == 0 ? 100 : 35 + static_cast<unsigned>(draw(rng, 50));
        WeightedGraph g = random_graph(rng, n, percent, max_w);
        if (g.edge_count() <= max_edges) return g;
    }
}

/// Simplicial insertion: each new vertex joins a clique of the current graph.
inline WeightedGraph random_chordal(std::mt19937_64& rng, std::size_t n, std::size_t attach, Units max_w) {
    std::vector<std::vector<Vertex>> cliques{{0}};
    std::set<VertexPair> pairs;
    for (Vertex v = 1; v < n; ++v) {
        std::vector<Vertex> c = cliques[draw(rng, cliques.size())];
        std::shuffle(c.begin(), c.end(), rng);
        c.resize(1 + draw(rng, std::min(c.size(), attach)));
        for (Vertex u : c) pairs.insert(VertexPair::of(u, v));
        c.push_back(v);
        cliques.push_back(c);
    }
    std::vector<Edge> edges;
    for (const VertexPair& p : pairs) edges.push_back({p.u, p.v, Weight{static_cast<Units>(draw(rng, max_w + 1))}});
    return WeightedGraph(n, std::move(edges));
}

/// Plain triple loop; kUnreachable for disconnected pairs.
inline std::vector<Units> floyd(const WeightedGraph& g, const std::vector<Units>& w) {
    const std::size_t n = g.vertex_count();
    std::vector<Units> d(n * n, kUnreachable);
    for (Vertex v = 0; v < n; ++v) d[v * n + v] = 0;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        d[e.u * n + e.v] = std::min(d[e.u * n + e.v], w[id]);
        d[e.v * n + e.u] = std::min(d[e.v * n + e.u], w[id]);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i * n + k] < kUnreachable && d[k * n + j] < kUnreachable)
                    d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    return d;
}

inline std::vector<Units> floyd(const WeightedGraph& g) { return floyd(g, g.weight_units()); }

/// Every edge equals the distance between its endpoints.
inline bool metric_by_floyd(const WeightedGraph& g) {
    const std::vector<Units> d = floyd(g);
    const std::size_t n = g.vertex_count();
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return d[e.u * n + e.v] == e.w.units(); });
}

struct Cycle {
    std::vector<EdgeId> edges;
    EdgeId top = kNoEdge;
    bool broken = false;
};

/// Every simple cycle, found by trying each vertex subset in each cyclic
/// order (smallest vertex first, second < last).
inline std::vector<Cycle> all_cycles(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Cycle> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 3) continue;
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < n; ++v)
            if (mask & (1u << v)) vs.push_back(v);
        std::vector<Vertex> rest(vs.begin() + 1, vs.end());
        do {
            if (rest.front() > rest.back()) continue;
            std::vector<Vertex> order{vs.front()};
            order.insert(order.end(), rest.begin(), rest.end());
            Cycle c;
            bool ok = true;
            for (std::size_t i = 0; i < order.size() && ok; ++i) {
                const EdgeId id = g.find_edge(order[i], order[(i + 1) % order.size()]);
                ok = id != kNoEdge;
                c.edges.push_back(id);
            }
            if (!ok) continue;
            Units total = 0;
            for (EdgeId id : c.edges) {
                total += g.weight(id).units();
                if (c.top == kNoEdge || g.weight(id) > g.weight(c.top)) c.top = id;
            }
            c.broken = 2 * g.weight(c.top).units() > total;
            out.push_back(std::move(c));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

inline bool metric_by_cycles(const WeightedGraph& g) {
    const auto cycles = all_cycles(g);
    return std::none_of(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.broken; });
}

inline bool hits(const Cycle& c, const std::vector<bool>& in, Omega omega) {
    return std::any_of(c.edges.begin(), c.edges.end(),
                       [&](EdgeId id) { return in[id] && (omega == Omega::General || id != c.top); });
}

/// Visits every k-subset of [0, m) in lexicographic order until `f` returns true.
template <typename F>
bool any_subset(std::size_t m, std::size_t k, F&& f) {
    if (k > m) return false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        if (f(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Smallest edge set hitting every broken cycle (a bottom edge of it for
/// increase-only). Independent route to OPT for increase and general.
inline std::size_t cover_opt(const WeightedGraph& g, Omega omega) {
    std::vector<Cycle> broken;
    for (Cycle& c : all_cycles(g))
        if (c.broken) broken.push_back(std::move(c));
    const std::size_t m = g.edge_count();
    for (std::size_t k = 0;; ++k) {
        const bool found = any_subset(m, k, [&](const std::vector<std::size_t>& s) {
            std::vector<bool> in(m, false);
            for (std::size_t id : s) in[id] = true;
            return std::all_of(broken.begin(), broken.end(), [&](const Cycle& c) { return hits(c, in, omega); });
        });
        if (found) return k;
    }
}

/// Smallest decrease-only support: a support S works iff lowering each of
/// its edges to the original distance yields a metric graph.
inline std::size_t decrease_opt(const WeightedGraph& g) {
    const std::vector<Units> d = floyd(g);
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    for (std::size_t k = 0;; ++k) {
        const bool found = any_subset(m, k, [&](const std::vector<std::size_t>& s) {
            std::vector<Units> w = g.weight_units();
            for (std::size_t id : s) w[id] = d[g.edge(id).u * n + g.edge(id).v];
            const std::vector<Units> d2 = floyd(g, w);
            for (EdgeId id = 0; id < m; ++id)
                if (d2[g.edge(id).u * n + g.edge(id).v] != w[id]) return false;
            return true;
        });
        if (found) return k;
    }
}

inline std::size_t min_vertex_cover(std::size_t n, const std::vector<VertexPair>& edges) {
    std::size_t best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const bool covers = std::all_of(edges.begin(), edges.end(), [&](const VertexPair& e) {
            return (mask & (1u << e.u)) || (mask & (1u << e.v));
        });
        if (covers) best = std::min<std::size_t>(best, __builtin_popcount(mask));
    }
    return best;
}

inline std::vector<VertexPair> random_connected(std::mt19937_64& rng, std::size_t n) {
    std::set<VertexPair> edges;
    for (Vertex v = 1; v < n; ++v) edges.insert(VertexPair::of(v, draw(rng, v)));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (draw(rng, 3) == 0) edges.insert({u, v});
    return {edges.begin(), edges.end()};
}

/// Repaired graph is metric and every entry respects the class.
inline bool valid_repair(const WeightedGraph& g, const RepairDelta& delta, Omega omega) {
    for (const DeltaEntry& e : delta.entries()) {
        if (omega == Omega::IncreaseOnly && e.delta < 0) return false;
        if (omega == Omega::DecreaseOnly && e.delta > 0) return false;
    }
    return metric_by_floyd(apply_delta(g, delta));
}

} // namespace mrtest
