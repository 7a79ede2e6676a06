#include <gtest/gtest.h>

#include <cstdlib>

#include "metric_repair/errors.hpp"
#include "metric_repair/exact.hpp"
#include "support.hpp"

using namespace metric_repair;

namespace {

WeightedGraph cycle(std::size_t n, Units top, Units rest) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Weight{rest}});
    edges.push_back({0, n - 1, Weight{top}});
    return WeightedGraph(n, std::move(edges));
}

// K4 whose only broken triangle is 0-1-2 with top (0,1).
WeightedGraph k4_single() {
    return WeightedGraph(4, {{0, 1, Weight{3}}, {0, 2, Weight{1}}, {1, 2, Weight{1}},
                             {0, 3, Weight{2}}, {1, 3, Weight{2}}, {2, 3, Weight{1}}});
}

// K4 with one edge 5 and the rest 1: triangles 0-1-2 and 0-1-3 are broken.
WeightedGraph k4_heavy() {
    return WeightedGraph(4, {{0, 1, Weight{5}}, {0, 2, Weight{1}}, {1, 2, Weight{1}},
                             {0, 3, Weight{1}}, {1, 3, Weight{1}}, {2, 3, Weight{1}}});
}

Support ids(std::initializer_list<EdgeId> list) { return Support(std::vector<EdgeId>(list)); }

} // namespace

TEST(Support, Construction) {
    const WeightedGraph g = k4_single();
    const Support s = Support::from_pairs(g, std::vector<VertexPair>{{2, 3}, {0, 1}, {0, 1}});
    EXPECT_EQ(s.size(), 2u);
    EXPECT_TRUE(s.contains(g.find_edge(0, 1)));
    EXPECT_EQ(s.pairs(g), (std::vector<VertexPair>{{0, 1}, {2, 3}}));
    EXPECT_THROW(Support::from_pairs(cycle(4, 1, 1), std::vector<VertexPair>{{0, 2}}), PreconditionError);
}

TEST(Dmr, Examples) {
    const WeightedGraph t(3, {{0, 1, Weight{3}}, {1, 2, Weight{1}}, {0, 2, Weight{1}}});
    const RepairDelta d = dmr(t);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.entries()[0], (DeltaEntry{0, 1, -1}));
    EXPECT_TRUE(dmr(cycle(5, 4, 1)).empty());
    EXPECT_EQ(dmr(k4_heavy()).size(), 1u);
    EXPECT_EQ(dmr(k4_heavy()).at(0, 1), -3);
}

TEST(Dmr, MatchesDecreaseOracleAndMinimizesNorms) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const WeightedGraph g = mrtest::random_capped(rng, 3 + mrtest::draw(rng, 4), 10, 9);
        const RepairDelta d = dmr(g);
        ASSERT_EQ(d.size(), mrtest::decrease_opt(g));
        ASSERT_TRUE(mrtest::valid_repair(g, d, Omega::DecreaseOnly));
        // Any decrease-only repair lowers each edge to at most its distance,
        // so no entry of dmr can be reduced in magnitude.
        const auto dist = mrtest::floyd(g);
        for (const DeltaEntry& e : d.entries())
            EXPECT_EQ(g.weight(g.find_edge(e.u, e.v)).units() + e.delta, dist[e.u * g.vertex_count() + e.v]);
    }
}

TEST(Verifier, C5WithOneBottomEdge) {
    const WeightedGraph g = cycle(5, 5, 1);
    const VerifierOutcome r = verify_support(g, Support::from_pairs(g, std::vector<VertexPair>{{0, 1}}), Omega::IncreaseOnly);
    ASSERT_TRUE(r.accepted());
    ASSERT_EQ(r.delta().size(), 1u);
    EXPECT_EQ(r.delta().at(0, 1), 4);
}

TEST(Verifier, RejectionsAndDecrease) {
    const WeightedGraph g = cycle(5, 5, 1);
    const auto none = verify_support(g, Support{}, Omega::IncreaseOnly);
    ASSERT_FALSE(none.accepted());
    EXPECT_EQ(none.rejection(), Rejection::ChangedOutsideSupport);

    const Support top = Support::from_pairs(g, std::vector<VertexPair>{{0, 4}});
    const auto inc = verify_support(g, top, Omega::IncreaseOnly);
    ASSERT_FALSE(inc.accepted());
    EXPECT_EQ(inc.rejection(), Rejection::DecreasedInIncreaseMode);
    const auto gen = verify_support(g, top, Omega::General);
    ASSERT_TRUE(gen.accepted());
    EXPECT_EQ(gen.delta().at(0, 4), -1);

    EXPECT_THROW(verify_support(g, top, Omega::DecreaseOnly), PreconditionError);
    EXPECT_EQ(to_string(Rejection::ChangedOutsideSupport), "changed-outside-support");
}

TEST(Verifier, MetricGraphAcceptsEmptySupport) {
    const WeightedGraph g = cycle(5, 4, 1);
    for (Omega o : {Omega::IncreaseOnly, Omega::General}) {
        const auto r = verify_support(g, Support{}, o);
        ASSERT_TRUE(r.accepted());
        EXPECT_TRUE(r.delta().empty());
    }
}

TEST(Verifier, K4Examples) {
    EXPECT_EQ(oracle_opt(k4_single(), Omega::IncreaseOnly, 6)->support.size(), 1u);
    EXPECT_EQ(oracle_opt(k4_heavy(), Omega::IncreaseOnly, 6)->support.size(), 2u);
    EXPECT_EQ(oracle_opt(k4_heavy(), Omega::General, 6)->support.size(), 1u);
}

TEST(Verifier, AcceptedDeltasAreValidRepairs) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const WeightedGraph g = mrtest::random_capped(rng, 3 + mrtest::draw(rng, 4), 9, 7);
        SupportVerifier verifier(g);
        const std::size_t m = g.edge_count();
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<EdgeId> s;
            for (EdgeId id = 0; id < m; ++id)
                if (mask & (1u << id)) s.push_back(id);
            for (Omega o : {Omega::IncreaseOnly, Omega::General}) {
                const VerifierOutcome r = verifier.check(s, o);
                ASSERT_EQ(r.accepted(), verifier.accepts(s, o));
                ASSERT_EQ(r.accepted(), verify_support(g, Support(s), o).accepted());
                if (!r.accepted()) continue;
                ASSERT_TRUE(mrtest::valid_repair(g, r.delta(), o));
                for (const DeltaEntry& e : r.delta().entries()) ASSERT_TRUE(mask & (1u << g.find_edge(e.u, e.v)));
            }
        }
    }
}

TEST(StructureTheorem, SmallExamples) {
    const WeightedGraph g = cycle(5, 5, 1);
    EXPECT_FALSE(check_structure_theorem(g, Support{}, Omega::General));
    EXPECT_TRUE(check_structure_theorem(g, ids({g.find_edge(0, 4)}), Omega::General));
    EXPECT_FALSE(check_structure_theorem(g, ids({g.find_edge(0, 4)}), Omega::IncreaseOnly));
    EXPECT_TRUE(check_structure_theorem(g, ids({g.find_edge(1, 2)}), Omega::IncreaseOnly));
    EXPECT_THROW(check_structure_theorem(g, Support{}, Omega::DecreaseOnly), PreconditionError);
    EXPECT_THROW(check_structure_theorem(cycle(12, 12, 1), Support{}, Omega::General), EnumerationLimitError);
}

TEST(Oracle, MatchesIndependentCoverOracle) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const WeightedGraph g = mrtest::random_capped(rng, 3 + mrtest::draw(rng, 4), 11, 9);
        for (Omega o : {Omega::IncreaseOnly, Omega::General}) {
            const auto s = oracle_opt(g, o, g.edge_count());
            ASSERT_TRUE(s.has_value());
            ASSERT_EQ(s->support.size(), mrtest::cover_opt(g, o));
            ASSERT_TRUE(mrtest::valid_repair(g, s->delta, o));
        }
        const auto d = oracle_opt(g, Omega::DecreaseOnly, g.edge_count());
        ASSERT_EQ(d->support.size(), mrtest::decrease_opt(g));
    }
}

TEST(Oracle, BudgetAndGuard) {
    EXPECT_FALSE(oracle_opt(k4_heavy(), Omega::IncreaseOnly, 1).has_value());
    EXPECT_FALSE(oracle_opt(k4_heavy(), Omega::DecreaseOnly, 0).has_value());
    std::mt19937_64 rng(44);
    const WeightedGraph big = mrtest::random_complete(rng, 8, 5);  // 28 edges
    EXPECT_THROW((void)oracle_opt(big, Omega::General, 3), EnumerationLimitError);
    EXPECT_NO_THROW((void)oracle_opt(big, Omega::General, 0, 28));
}

TEST(Oracle, EdgeLimitFromEnvironment) {
    ::unsetenv("METRIC_REPAIR_ORACLE_EDGE_LIMIT");
    EXPECT_EQ(oracle_edge_limit_from_env(), kDefaultOracleEdgeLimit);
    ::setenv("METRIC_REPAIR_ORACLE_EDGE_LIMIT", "30", 1);
    EXPECT_EQ(oracle_edge_limit_from_env(), 30u);
    ::setenv("METRIC_REPAIR_ORACLE_EDGE_LIMIT", "x", 1);
    EXPECT_THROW(oracle_edge_limit_from_env(), ParseError);
    ::unsetenv("METRIC_REPAIR_ORACLE_EDGE_LIMIT");
}
