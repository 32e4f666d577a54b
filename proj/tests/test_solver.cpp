// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <vector>

#include "support/naive_solver.hpp"
#include "support/random_graphs.hpp"
#include "wpeb/enumerate.hpp"
#include "wpeb/solver.hpp"

using namespace wpeb;

namespace {

Rational r(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

WeightedGraph cycle(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return WeightedGraph::uniform(n, es);
}

}  // namespace

TEST(Solver, ClassicalPebblingNumbers) {
    EXPECT_EQ(pebbling_number(WeightedGraph(1, {})), 1);
    for (std::size_t len = 1; len <= 5; ++len) {
        EXPECT_EQ(pebbling_number(uniform_path(len)), std::int64_t{1} << len) << "path " << len;
    }
    EXPECT_EQ(pebbling_number(complete_graph(3)), 3);
    EXPECT_EQ(pebbling_number(complete_graph(4)), 4);
    EXPECT_EQ(pebbling_number(star_graph(2)), 4);
    EXPECT_EQ(pebbling_number(star_graph(3)), 5);
    EXPECT_EQ(pebbling_number(star_graph(4)), 6);
    EXPECT_EQ(pebbling_number(cycle(4)), 4);
    EXPECT_EQ(pebbling_number(cycle(5)), 5);
    EXPECT_EQ(pebbling_number(cycle(6)), 8);
    EXPECT_EQ(pebbling_number(cycle(7)), 11);
}

TEST(Solver, SingleWeightedEdge) {
    for (std::int64_t a = 1; a <= 7; ++a) {
        const auto g = WeightedGraph(2, {{0, 1, r(1, a)}});
        EXPECT_EQ(pebbling_number(g, 1), a);
        EXPECT_EQ(pebbling_number(g), a);
    }
}

TEST(Solver, UnitEdgesAreContracted) {
    const auto g = WeightedGraph(3, {{0, 1, r(1)}, {1, 2, r(1)}});
    EXPECT_EQ(pebbling_number(g), 1);
    const auto h = WeightedGraph(3, {{0, 1, r(1)}, {1, 2, r(1, 2)}});
    EXPECT_EQ(pebbling_number(h), 2);
}

TEST(Solver, DisconnectedOrZeroWeightIsInfinite) {
    EXPECT_TRUE(pebbling_number(WeightedGraph(2, {})).is_infinite());
    EXPECT_TRUE(pebbling_number(WeightedGraph(2, {{0, 1, r(0)}})).is_infinite());
    EXPECT_FALSE(p_solvable(WeightedGraph(2, {{0, 1, r(0)}}), 50));
}

TEST(Solver, CertificateReplaysAndReachesTarget) {
    const auto g = uniform_path(3);
    const Configuration c(std::vector<std::int64_t>{8, 0, 0, 0});
    const auto cert = is_solvable(g, c, 3);
    ASSERT_TRUE(cert.solvable);
    EXPECT_TRUE(replay(g, c, 3, cert.moves));
    EXPECT_EQ(cert.moves.size(), 3U);
    EXPECT_FALSE(is_solvable(g, Configuration(std::vector<std::int64_t>{7, 0, 0, 0}), 3).solvable);
}

TEST(Solver, CertificateThroughUnitEdgesIsLifted) {
    // Pebbles sit at 0; 0-1 has weight 1, so the lifted certificate must walk them.
    const auto g = WeightedGraph(3, {{0, 1, r(1)}, {1, 2, r(1, 2)}});
    const Configuration c(std::vector<std::int64_t>{2, 0, 0});
    const auto cert = is_solvable(g, c, 2);
    ASSERT_TRUE(cert.solvable);
    EXPECT_TRUE(replay(g, c, 2, cert.moves));
}

TEST(Solver, ReplayRejectsBadCertificates) {
    const auto g = uniform_path(2);
    const Configuration c(std::vector<std::int64_t>{4, 0, 0});
    const std::vector<MoveStep> short_of_target{{0, 1, 2, 1}};
    EXPECT_FALSE(replay(g, c, 2, short_of_target));
    const std::vector<MoveStep> wrong_delivery{{0, 1, 4, 3}, {1, 2, 2, 1}};
    EXPECT_FALSE(replay(g, c, 2, wrong_delivery));
    const std::vector<MoveStep> good{{0, 1, 4, 2}, {1, 2, 2, 1}};
    EXPECT_TRUE(replay(g, c, 2, good));
}

TEST(Solver, IsPSolvableWitnessIsGenuine) {
    const auto g = star_graph(3);
    const auto res = is_p_solvable(g, 4);
    ASSERT_FALSE(res.solvable);
    ASSERT_TRUE(res.witness.has_value());
    EXPECT_EQ(res.witness->configuration.size(), 4);
    EXPECT_FALSE(wpeb::testing::naive_reachable(g, res.witness->configuration.counts(), res.witness->target));
    EXPECT_TRUE(is_p_solvable(g, 5).solvable);
    EXPECT_TRUE(p_solvable(g, 5));
}

TEST(Solver, MaxUnsolvableSizeMatchesPebblingNumber) {
    const auto g = uniform_path(3);
    TargetSearch search(g, 3);
    EXPECT_EQ(search.max_unsolvable_size(), 7);
    EXPECT_EQ(search.max_unsolvable_size(3), 3);
    EXPECT_EQ(search.target(), 3U);
}

TEST(Solver, CompositionsAreEnumeratedInColexOrder) {
    std::vector<std::vector<std::int64_t>> seen;
    for_each_composition(3, 2, [&](const std::vector<std::int64_t>& c) {
        seen.push_back(c);
        return true;
    });
    ASSERT_EQ(seen.size(), 6U);
    EXPECT_EQ(seen.front(), (std::vector<std::int64_t>{2, 0, 0}));
    EXPECT_EQ(seen.back(), (std::vector<std::int64_t>{0, 0, 2}));
}

TEST(SolverOracle, ReachabilityAgreesWithNaiveSearch) {
    wpeb::testing::Rng rng(101);
    const auto& values = wpeb::testing::grid6();
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto n = static_cast<std::size_t>(wpeb::testing::uniform(rng, 2, 5));
        const auto g = wpeb::testing::random_graph(rng, n, 30, values);
        const auto c = wpeb::testing::random_configuration(rng, n, n <= 3 ? 6 : 4);
        const auto t = static_cast<Vertex>(wpeb::testing::uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        const auto cert = is_solvable(g, c, t);
        ASSERT_EQ(cert.solvable, wpeb::testing::naive_reachable(g, c.counts(), t)) << "trial " << trial;
        if (cert.solvable) EXPECT_TRUE(replay(g, c, t, cert.moves));
        ++checked;
    }
    EXPECT_EQ(checked, 400);
}

TEST(SolverOracle, PebblingNumberAgreesWithNaiveScan) {
    wpeb::testing::Rng rng(202);
    const std::vector<Rational> values{r(1, 3), r(1, 2), r(2, 3), r(3, 4), r(1)};
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(wpeb::testing::uniform(rng, 2, 4));
        const auto g = wpeb::testing::random_graph(rng, n, 30, values);
        const auto t = static_cast<Vertex>(wpeb::testing::uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        const auto fast = pebbling_number(g, t);
        ASSERT_TRUE(fast.is_finite());
        const auto slow = wpeb::testing::naive_pebbling_number(g, t, fast.value() + 1);
        ASSERT_TRUE(slow.has_value());
        EXPECT_EQ(fast, *slow) << "trial " << trial;
    }
}
