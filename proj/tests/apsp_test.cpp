#include <gtest/gtest.h>

#include <functional>

#include "metric_repair/apsp.hpp"
#include "support.hpp"

using namespace metric_repair;

namespace {

/// Shortest distance by enumerating every simple path.
Units path_enumeration(const WeightedGraph& g, Vertex s, Vertex t) {
    Units best = kUnreachable;
    std::vector<bool> seen(g.vertex_count(), false);
    std::function<void(Vertex, Units)> walk = [&](Vertex v, Units len) {
        if (v == t) {
            best = std::min(best, len);
            return;
        }
        seen[v] = true;
        for (const Incidence& inc : g.neighbors(v)) {
            if (!seen[inc.to]) walk(inc.to, len + g.weight(inc.edge).units());
        }
        seen[v] = false;
    };
    walk(s, 0);
    return best;
}

void expect_valid_path(const WeightedGraph& g, const std::vector<Vertex>& path, Vertex s, Vertex t, Units dist) {
    ASSERT_FALSE(path.empty());
    EXPECT_EQ(path.front(), s);
    EXPECT_EQ(path.back(), t);
    Units len = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const EdgeId id = g.find_edge(path[i], path[i + 1]);
        ASSERT_NE(id, kNoEdge);
        len += g.weight(id).units();
    }
    EXPECT_EQ(len, dist);
}

} // namespace

TEST(Apsp, EngineSelection) {
    EXPECT_EQ(select_engine(10, 25), ApspEngine::SparseSearch);
    EXPECT_EQ(select_engine(10, 26), ApspEngine::DenseRelaxation);
}

TEST(Apsp, EnginesAgreeWithPathEnumeration) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + mrtest::draw(rng, 6);
        const WeightedGraph g = mrtest::random_graph(rng, n, 20 + 10 * (trial % 8), 6);
        const DistanceTable dense = shortest_distances(g, ApspEngine::DenseRelaxation);
        const DistanceTable sparse = shortest_distances(g, ApspEngine::SparseSearch);
        ASSERT_EQ(dense, sparse);
        for (Vertex s = 0; s < n; ++s)
            for (Vertex t = 0; t < n; ++t) EXPECT_EQ(dense.at(s, t), path_enumeration(g, s, t));
    }
}

TEST(Apsp, CanonicalPathsAgreeAcrossEngines) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + mrtest::draw(rng, 8);
        // Small weights including 0 give many ties.
        const WeightedGraph g = mrtest::random_graph(rng, n, 60, 2);
        const ApspResult a = apsp(g, ApspEngine::DenseRelaxation);
        const ApspResult b = apsp(g, ApspEngine::SparseSearch);
        const auto w = g.weight_units();
        for (Vertex s = 0; s < n; ++s) {
            for (Vertex t = 0; t < n; ++t) {
                const auto pa = a.path(s, t);
                EXPECT_EQ(pa, b.path(s, t));
                if (!a.distances().reachable(s, t)) {
                    EXPECT_TRUE(pa.empty());
                    EXPECT_FALSE(a.distance(s, t).has_value());
                    continue;
                }
                expect_valid_path(g, pa, s, t, a.distances().at(s, t));
                EXPECT_EQ(pa, canonical_path(g, w, a.distances(), s, t));
            }
        }
    }
}

TEST(Apsp, CanonicalPathUsesFewestEdges) {
    // 0-1-2-3 costs 0 over three edges, 0-3 costs 0 directly.
    const WeightedGraph g(4, {{0, 1, Weight{0}}, {1, 2, Weight{0}}, {2, 3, Weight{0}}, {0, 3, Weight{0}}});
    EXPECT_EQ(apsp(g).path(0, 3), (std::vector<Vertex>{0, 3}));
    EXPECT_EQ(apsp(g).path(1, 3), (std::vector<Vertex>{1, 0, 3}));
}

TEST(Apsp, OverridesRemoveEdges) {
    const WeightedGraph g(3, {{0, 1, Weight{1}}, {1, 2, Weight{1}}, {0, 2, Weight{5}}});
    std::vector<Units> w = g.weight_units();
    w[g.find_edge(1, 2)] = kUnreachable;
    for (ApspEngine e : {ApspEngine::DenseRelaxation, ApspEngine::SparseSearch}) {
        const DistanceTable d = shortest_distances(g, w, e);
        EXPECT_EQ(d.at(0, 2), 5);
        EXPECT_EQ(d.at(1, 2), 6);
    }
    w[g.find_edge(0, 2)] = kUnreachable;
    EXPECT_FALSE(shortest_distances(g, w).reachable(1, 2));
}

TEST(Apsp, DisconnectedAndEmpty) {
    const WeightedGraph g(4, {{0, 1, Weight{3}}});
    const ApspResult r = apsp(g);
    EXPECT_EQ(r.distance(0, 1), Weight{3});
    EXPECT_FALSE(r.distance(0, 2).has_value());
    EXPECT_EQ(r.distance(2, 2), Weight{0});
    EXPECT_EQ(r.path(2, 2), (std::vector<Vertex>{2}));
    EXPECT_EQ(shortest_distances(WeightedGraph(0, {})).size(), 0u);
}
