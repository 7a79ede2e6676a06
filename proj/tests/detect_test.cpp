#include <gtest/gtest.h>

#include <set>

#include "metric_repair/detect.hpp"
#include "metric_repair/errors.hpp"
#include "support.hpp"

using namespace metric_repair;

namespace {

WeightedGraph cycle(std::size_t n, Units top, Units rest) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Weight{rest}});
    edges.push_back({0, n - 1, Weight{top}});
    return WeightedGraph(n, std::move(edges));
}

/// Checks that `order` is a perfect elimination ordering: the later
/// neighbors of each vertex form a clique.
bool is_peo(const WeightedGraph& g, const std::vector<Vertex>& order) {
    std::vector<std::size_t> pos(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (Vertex v : order) {
        std::vector<Vertex> later;
        for (const Incidence& inc : g.neighbors(v))
            if (pos[inc.to] > pos[v]) later.push_back(inc.to);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

/// Chordless cycle of length >= 4 through brute force.
bool has_chordless_cycle(const WeightedGraph& g) {
    for (const mrtest::Cycle& c : mrtest::all_cycles(g)) {
        if (c.edges.size() < 4) continue;
        std::set<Vertex> vs;
        for (EdgeId id : c.edges) {
            vs.insert(g.edge(id).u);
            vs.insert(g.edge(id).v);
        }
        std::size_t induced = 0;
        for (Vertex a : vs)
            for (Vertex b : vs)
                if (a < b && g.has_edge(a, b)) ++induced;
        if (induced == c.edges.size()) return true;
    }
    return false;
}

} // namespace

TEST(Detect, TriangleExamples) {
    const WeightedGraph broken(3, {{0, 1, Weight{3}}, {1, 2, Weight{1}}, {0, 2, Weight{1}}});
    const auto t = enumerate_broken_triangles(broken);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(broken.edge(t[0].top).pair(), (VertexPair{0, 1}));
    EXPECT_FALSE(is_metric(broken));

    const WeightedGraph tight(3, {{0, 1, Weight{2}}, {1, 2, Weight{1}}, {0, 2, Weight{1}}});
    EXPECT_TRUE(enumerate_broken_triangles(tight).empty());
    EXPECT_TRUE(is_metric(tight));
    EXPECT_FALSE(find_broken_witness(tight).has_value());
}

TEST(Detect, TrianglesMatchBruteScan) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        const WeightedGraph g = mrtest::random_graph(rng, 3 + mrtest::draw(rng, 6), trial % 2 ? 100 : 60, 9);
        std::vector<std::array<Vertex, 3>> expected;
        const std::size_t n = g.vertex_count();
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c) {
                    const EdgeId x = g.find_edge(a, b), y = g.find_edge(b, c), z = g.find_edge(a, c);
                    if (x == kNoEdge || y == kNoEdge || z == kNoEdge) continue;
                    const Units p = g.weight(x).units(), q = g.weight(y).units(), r = g.weight(z).units();
                    if (p > q + r || q > p + r || r > p + q) expected.push_back({a, b, c});
                }
        const auto found = enumerate_broken_triangles(g);
        ASSERT_EQ(found.size(), expected.size());
        for (std::size_t i = 0; i < found.size(); ++i) {
            EXPECT_EQ(found[i].vertices, expected[i]);
            for (EdgeId b : found[i].bottoms) EXPECT_GT(g.weight(found[i].top), g.weight(b));
        }
        EXPECT_EQ(broken_triangles(g).size(), expected.size());
    }
}

TEST(Detect, IsMetricMatchesCycleEnumeration) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 150; ++trial) {
        const WeightedGraph g = mrtest::random_graph(rng, 2 + mrtest::draw(rng, 6), 30 + 10 * (trial % 7), 5);
        const bool metric = mrtest::metric_by_cycles(g);
        ASSERT_EQ(is_metric(g), metric);
        ASSERT_EQ(mrtest::metric_by_floyd(g), metric);
        const auto w = find_broken_witness(g);
        ASSERT_EQ(w.has_value(), !metric);
        if (w) { EXPECT_TRUE(is_valid_witness(g, *w)); }
    }
}

TEST(Detect, WitnessValidation) {
    const WeightedGraph g = cycle(4, 5, 1);
    const auto w = find_broken_witness(g);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->top, (VertexPair{0, 3}));
    EXPECT_EQ(w->cycle, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_TRUE(is_valid_witness(g, *w));
    EXPECT_FALSE(is_valid_witness(g, {{0, 1, 3}, {0, 3}}));
    EXPECT_FALSE(is_valid_witness(g, {{0, 1}, {0, 1}}));
    EXPECT_FALSE(is_valid_witness(cycle(4, 3, 1), {{0, 1, 2, 3}, {0, 3}}));
}

TEST(Detect, LongestBrokenCycle) {
    EXPECT_EQ(longest_broken_cycle_len(cycle(5, 5, 1)), 5u);
    EXPECT_FALSE(longest_broken_cycle_len(cycle(5, 4, 1)).has_value());
    EXPECT_THROW((void)longest_broken_cycle_len(cycle(11, 11, 1)), EnumerationLimitError);
    EXPECT_EQ(longest_broken_cycle_len(cycle(11, 11, 1), 11), 11u);

    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        const WeightedGraph g = mrtest::random_graph(rng, 3 + mrtest::draw(rng, 5), 70, 8);
        std::optional<std::size_t> expected;
        for (const auto& c : mrtest::all_cycles(g))
            if (c.broken) expected = std::max(expected.value_or(0), c.edges.size());
        EXPECT_EQ(longest_broken_cycle_len(g), expected);
        std::size_t count = 0;
        for (const auto& c : mrtest::all_cycles(g)) count += c.broken;
        EXPECT_EQ(enumerate_broken_cycles(g, kDefaultCycleBudget).size(), count);
    }
}

TEST(Detect, SimpleCycleVisitorSeesEachCycleOnce) {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 30; ++trial) {
        const WeightedGraph g = mrtest::random_graph(rng, 3 + mrtest::draw(rng, 5), 60, 3);
        std::set<std::vector<EdgeId>> seen;
        std::size_t visits = 0;
        for_each_simple_cycle(g, kDefaultCycleBudget, [&](std::span<const Vertex> vs, std::span<const EdgeId> es) {
            ++visits;
            EXPECT_EQ(vs.size(), es.size());
            std::vector<EdgeId> key(es.begin(), es.end());
            std::sort(key.begin(), key.end());
            seen.insert(key);
        });
        EXPECT_EQ(visits, seen.size());
        EXPECT_EQ(visits, mrtest::all_cycles(g).size());
    }
}

TEST(Detect, Chordality) {
    std::mt19937_64 rng(35);
    const WeightedGraph k5 = mrtest::random_complete(rng, 5, 3);
    ASSERT_TRUE(is_chordal(k5).has_value());
    EXPECT_TRUE(is_peo(k5, *is_chordal(k5)));
    EXPECT_FALSE(is_chordal(cycle(4, 1, 1)).has_value());
    EXPECT_TRUE(is_chordal(cycle(3, 1, 1)).has_value());
    EXPECT_TRUE(is_chordal(WeightedGraph(3, {})).has_value());

    for (int trial = 0; trial < 50; ++trial) {
        const WeightedGraph g = mrtest::random_chordal(rng, 2 + mrtest::draw(rng, 9), 3, 5);
        const auto order = is_chordal(g);
        ASSERT_TRUE(order.has_value());
        EXPECT_EQ(order->size(), g.vertex_count());
        EXPECT_TRUE(is_peo(g, *order));
    }
    for (int trial = 0; trial < 80; ++trial) {
        const WeightedGraph g = mrtest::random_graph(rng, 3 + mrtest::draw(rng, 5), 50, 1);
        const auto order = is_chordal(g);
        EXPECT_EQ(order.has_value(), !has_chordless_cycle(g));
        if (order) { EXPECT_TRUE(is_peo(g, *order)); }
    }
}
