#include "metric_repair/approx.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "metric_repair/apsp.hpp"
#include "metric_repair/errors.hpp"
#include "metric_repair/simd/kernels.hpp"

namespace metric_repair {

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<Units> values, int decimals)
    : n_(n), values_(std::move(values)), decimals_(decimals) {
    if (values_.size() != n * n) throw PreconditionError("distance matrix has the wrong number of entries");
    Units total = 0;
    for (Vertex i = 0; i < n; ++i) {
        if (at(i, i) != 0) throw PreconditionError("distance matrix diagonal must be zero");
        for (Vertex j = i + 1; j < n; ++j) {
            if (at(i, j) != at(j, i)) throw PreconditionError("distance matrix is not symmetric");
            if (at(i, j) < 0) throw PreconditionError("distance matrix has a negative entry");
            total += at(i, j);
            if (total > kMaxTotalUnits) throw PreconditionError("distance matrix total exceeds the supported range");
        }
    }
}

DistanceMatrix DistanceMatrix::from_graph(const WeightedGraph& g) {
    if (!g.is_complete()) throw PreconditionError("this algorithm requires a complete graph");
    const std::size_t n = g.vertex_count();
    std::vector<Units> values(n * n, 0);
    for (const Edge& e : g.edges()) {
        values[e.u * n + e.v] = e.w.units();
        values[e.v * n + e.u] = e.w.units();
    }
    return DistanceMatrix(n, std::move(values), g.decimals());
}

WeightedGraph DistanceMatrix::to_graph() const {
    std::vector<Edge> edges;
    edges.reserve(n_ * (n_ == 0 ? 0 : n_ - 1) / 2);
    for (Vertex i = 0; i < n_; ++i) {
        for (Vertex j = i + 1; j < n_; ++j) edges.push_back({i, j, Weight{at(i, j)}});
    }
    return WeightedGraph(n_, std::move(edges), decimals_);
}

namespace {

std::vector<EdgeId> path_edges(const WeightedGraph& g, const std::vector<Vertex>& path) {
    std::vector<EdgeId> ids;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) ids.push_back(g.find_edge(path[i], path[i + 1]));
    return ids;
}

ApproxReport path_cover(const WeightedGraph& g, bool include_closing_edge) {
    const Omega omega = include_closing_edge ? Omega::General : Omega::IncreaseOnly;
    std::vector<Units> active = g.weight_units();
    std::vector<EdgeId> support;
    ApproxReport report;
    report.ratio_bound = include_closing_edge ? RatioBound::LPlusOne : RatioBound::L;

    while (true) {
        const DistanceTable dist = shortest_distances(g, active);
        ++report.iterations;

        // Edges that are not their own shortest path, in edge-id order.
        std::vector<std::vector<EdgeId>> paths;
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            if (active[id] >= kUnreachable) continue;
            const Edge& e = g.edge(id);
            if (dist.at(e.u, e.v) >= active[id]) continue;
            std::vector<EdgeId> cycle = path_edges(g, canonical_path(g, active, dist, e.u, e.v));
            if (include_closing_edge) cycle.push_back(id);
            paths.push_back(std::move(cycle));
        }
        if (paths.empty()) break;

        std::vector<bool> used(g.edge_count(), false);
        std::vector<std::vector<EdgeId>> batch;
        for (std::vector<EdgeId>& p : paths) {
            if (std::any_of(p.begin(), p.end(), [&](EdgeId id) { return used[id]; })) continue;
            for (EdgeId id : p) {
                used[id] = true;
                active[id] = kUnreachable;
                support.push_back(id);
            }
            batch.push_back(std::move(p));
        }
        report.batches.push_back(std::move(batch));
    }

    report.support = Support(std::move(support));
    VerifierOutcome outcome = verify_support(g, report.support, omega);
    if (!outcome.accepted()) throw std::logic_error("path cover produced a support the verifier rejected");
    report.delta = outcome.delta();
    return report;
}

bool is_broken(const DistanceMatrix& d, std::span<const Vertex> cycle, std::size_t& top_index) {
    Units total = 0;
    Units heaviest = -1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Units w = d.at(cycle[i], cycle[(i + 1) % cycle.size()]);
        total += w;
        if (w > heaviest) {
            heaviest = w;
            top_index = i;
        }
    }
    return heaviest > total - heaviest;
}

} // namespace

ApproxReport spc(const WeightedGraph& g) { return path_cover(g, false); }

ApproxReport general_spc(const WeightedGraph& g) { return path_cover(g, true); }

Support short_cycle_cover(const DistanceMatrix& d) {
    const std::size_t n = d.size();
    std::vector<bool> covered(n * n, false);
    std::vector<VertexPair> cover;
    std::vector<Vertex> chosen;
    std::vector<Vertex> cycle;

    auto consider = [&](std::span<const Vertex> c) {
        std::size_t top = 0;
        if (!is_broken(d, c, top)) return;
        const std::size_t m = c.size();
        for (std::size_t i = 0; i < m; ++i) {
            if (i != top && covered[c[i] * n + c[(i + 1) % m]]) return;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i == top) continue;
            const Vertex a = c[i];
            const Vertex b = c[(i + 1) % m];
            covered[a * n + b] = covered[b * n + a] = true;
            cover.push_back(VertexPair::of(a, b));
        }
    };

    // Cycles by length, then by vertex set; each is rooted at its smallest
    // vertex and its direction fixed by second < last.
    for (std::size_t length = 3; length <= 5 && length <= n; ++length) {
        chosen.resize(length);
        std::iota(chosen.begin(), chosen.end(), Vertex{0});
        while (true) {
            std::vector<Vertex> rest(chosen.begin() + 1, chosen.end());
            do {
                if (rest.front() < rest.back()) {
                    cycle.assign(1, chosen.front());
                    cycle.insert(cycle.end(), rest.begin(), rest.end());
                    consider(cycle);
                }
            } while (std::next_permutation(rest.begin(), rest.end()));

            std::size_t i = length;
            while (i > 0 && chosen[i - 1] == n - length + i - 1) --i;
            if (i == 0) break;
            ++chosen[i - 1];
            for (std::size_t j = i; j < length; ++j) chosen[j] = chosen[j - 1] + 1;
        }
    }

    const WeightedGraph g = d.to_graph();
    return Support::from_pairs(g, cover);
}

std::vector<VertexPair> chord4(const DistanceMatrix& d, const Support& cover) {
    const std::size_t n = d.size();
    const WeightedGraph g = d.to_graph();
    const std::vector<VertexPair> pairs = cover.pairs(g);
    std::vector<bool> in_cover(n * n, false);
    for (const VertexPair& p : pairs) in_cover[p.u * n + p.v] = in_cover[p.v * n + p.u] = true;
    auto has = [&](Vertex a, Vertex b) { return in_cover[a * n + b]; };

    std::vector<VertexPair> found;
    auto add = [&](Vertex a, Vertex b, Vertex c, Vertex e) {
        found.push_back(VertexPair::of(a, b));
        found.push_back(VertexPair::of(b, c));
        found.push_back(VertexPair::of(c, e));
        found.push_back(VertexPair::of(e, a));
    };
    for (std::size_t x = 0; x < pairs.size(); ++x) {
        for (std::size_t y = x + 1; y < pairs.size(); ++y) {
            const auto [a, b] = pairs[x];
            const auto [c, e] = pairs[y];
            if (a == c || a == e || b == c || b == e) continue;
            if (has(b, c) && has(e, a)) add(a, b, c, e);
            if (has(b, e) && has(c, a)) add(a, b, e, c);
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

ApproxReport five_cycle_cover(const DistanceMatrix& d) {
    const WeightedGraph g = d.to_graph();
    const Support short_cover = short_cycle_cover(d);
    std::vector<VertexPair> pairs = short_cover.pairs(g);
    const std::vector<VertexPair> embedded = chord4(d, short_cover);
    pairs.insert(pairs.end(), embedded.begin(), embedded.end());

    ApproxReport report;
    report.support = Support::from_pairs(g, pairs);
    report.iterations = 1;
    VerifierOutcome outcome = verify_support(g, report.support, Omega::IncreaseOnly);
    report.accepted = outcome.accepted();
    if (report.accepted) report.delta = outcome.delta();
    return report;
}

DistanceMatrix iomr_fixed_matrix(const DistanceMatrix& d) {
    const std::size_t n = d.size();
    std::vector<Units> values(d.row(0).data(), d.row(0).data() + n * n);
    const simd::MaxDifferenceFn max_difference = simd::active_kernels().max_difference;
    for (Vertex k = 0; k < n; ++k) {
        const Units* column = values.data() + k * n;  // D[j][k] == D[k][j]
        for (Vertex i = 0; i < n; ++i) {
            const Units best = max_difference(values.data() + i * n, column, i);
            if (best > values[i * n + k]) {
                values[i * n + k] = best;
                values[k * n + i] = best;
            }
        }
    }
    return DistanceMatrix(n, std::move(values), d.decimals());
}

RepairDelta iomr_fixed(const DistanceMatrix& d) {
    const DistanceMatrix repaired = iomr_fixed_matrix(d);
    std::vector<DeltaEntry> entries;
    for (Vertex i = 0; i < d.size(); ++i) {
        for (Vertex j = i + 1; j < d.size(); ++j) {
            if (repaired.at(i, j) != d.at(i, j)) entries.push_back({i, j, repaired.at(i, j) - d.at(i, j)});
        }
    }
    return RepairDelta(Omega::IncreaseOnly, std::move(entries));
}

} // namespace metric_repair
