/**
 * @file exchange_graph_test.cpp
 * @brief Canonical forms, exploration and graph verifiers.
 */

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "gca/exchange_graph.hpp"
#include "random_patterns.hpp"

using namespace gca;

namespace {

const ExchangeMatrix a2{{0, 1}, {-1, 0}};
const ExchangeMatrix a3{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};

/// Independent count: distinct unordered clusters over all reduced tree paths up to `depth`.
std::size_t clusters_by_tree_search(const ClusterPattern& p, std::size_t depth) {
    std::set<std::set<std::string>> clusters;
    std::vector<std::pair<Path, Seed>> stack{{Path{}, p.initial_seed()}};
    while (!stack.empty()) {
        auto [path, seed] = stack.back();
        stack.pop_back();
        std::set<std::string> keys;
        for (const auto& x : seed.x) keys.insert(x.key());
        clusters.insert(keys);
        if (path.size() == depth) continue;
        for (std::size_t k = 0; k < p.rank(); ++k) {
            if (!path.empty() && path.back() == k) continue;
            Path next = path;
            next.push_back(k);
            stack.emplace_back(next, mutate_seed(seed, p.pair(), k));
        }
    }
    return clusters.size();
}

}  // namespace

TEST(CanonicalForm, IdempotentAndPermutationInvariant) {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = fixtures::random_pattern(3, 2, rng, 2);
        const auto s = p.seed_at(fixtures::random_path(3, 2, rng));
        const auto c = canonical_form(s, p.pair());
        EXPECT_EQ(canonical_form(c.seed, c.pair).key, c.key);
        EXPECT_EQ(canonical_form(c.seed, c.pair).seed, c.seed);
        // Relabel the seed together with the pair: keys must agree.
        std::vector<std::size_t> perm(3);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_form(s.permuted(perm), p.pair().permuted(perm)).key, c.key);
    }
}

TEST(CanonicalForm, PentagonCloses) {
    const auto p = ClusterPattern::principal(a2, {1, 1});
    EXPECT_EQ(canonical_form(p.seed_at({0, 1, 0, 1, 0}), p.pair()).key, canonical_form(p.initial_seed(), p.pair()).key);
    EXPECT_NE(canonical_form(p.seed_at({0}), p.pair()).key, canonical_form(p.initial_seed(), p.pair()).key);
}

TEST(CanonicalForm, RejectsRepeatedVariables) {
    const auto p = ClusterPattern::principal(a2, {1, 1});
    Seed s = p.initial_seed();
    s.x[1] = s.x[0];
    EXPECT_THROW(canonical_form(s, p.pair()), error);
}

TEST(Explore, ClassicA2Pentagon) {
    const auto g = explore(ClusterPattern::principal(a2, {1, 1}), {});
    EXPECT_TRUE(g.is_complete());
    EXPECT_EQ(g.vertex_count(), 5u);
    EXPECT_EQ(g.edge_count(), 5u);
    EXPECT_EQ(g.variable_count(), 5u);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.neighbors(v).size(), 2u);
    EXPECT_TRUE(g.anomalies().empty());
}

TEST(Explore, CoefficientFreeA2) {
    const auto g = explore(ClusterPattern::coefficient_free(a2, {1, 1}), {});
    EXPECT_TRUE(g.is_complete());
    EXPECT_EQ(g.vertex_count(), 5u);
}

TEST(Explore, GeneralizedRank2MatchesCompanion) {
    const auto g = explore(ClusterPattern::principal(a2, {2, 1}), {});
    const auto companion = explore(ClusterPattern::principal(ExchangeMatrix{{0, 1}, {-2, 0}}, {1, 1}), {});
    ASSERT_TRUE(g.is_complete());
    ASSERT_TRUE(companion.is_complete());
    EXPECT_EQ(g.vertex_count(), companion.vertex_count());
    EXPECT_EQ(g.variable_count(), companion.variable_count());
    EXPECT_EQ(g.vertex_count(), clusters_by_tree_search(ClusterPattern::principal(a2, {2, 1}), 8));
}

TEST(Explore, A3HasFourteenClusters) {
    const auto p = ClusterPattern::principal(a3, {1, 1, 1});
    const auto g = explore(p, {});
    EXPECT_TRUE(g.is_complete());
    EXPECT_EQ(g.vertex_count(), 14u);
    EXPECT_EQ(g.edge_count(), 21u);
    EXPECT_EQ(g.variable_count(), 9u);
    EXPECT_EQ(clusters_by_tree_search(p, 8), 14u);
}

TEST(Explore, ZeroColumnsAreCountedAndConsistent) {
    // Two disconnected directions: every seed has zero columns.
    const auto g = explore(ClusterPattern::principal(ExchangeMatrix{{0, 0}, {0, 0}}, {2, 1}), {});
    EXPECT_TRUE(g.is_complete());
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_GT(g.zero_column_hits(), 0u);
    EXPECT_TRUE(g.anomalies().empty());
    EXPECT_EQ(explore(ClusterPattern::principal(a3, {1, 1, 1}), {}).zero_column_hits(), 0u);
}

TEST(Explore, DepthZeroAndLimits) {
    const auto p = ClusterPattern::principal(a2, {1, 1});
    ExploreLimits none;
    none.max_depth = 0;
    const auto g = explore(p, none);
    EXPECT_EQ(g.vertex_count(), 1u);
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_FALSE(g.is_complete());

    ExploreLimits few;
    few.max_vertices = 3;
    const auto h = explore(p, few);
    EXPECT_EQ(h.vertex_count(), 3u);
    EXPECT_FALSE(h.is_complete());
}

TEST(Explore, ResumesFromFrontier) {
    const auto p = ClusterPattern::principal(a3, {1, 1, 1});
    ExploreLimits shallow;
    shallow.max_depth = 2;
    ExchangeGraph g(p);
    g.extend(shallow);
    EXPECT_FALSE(g.is_complete());
    g.extend({});
    EXPECT_TRUE(g.is_complete());
    EXPECT_EQ(g.vertex_count(), 14u);
    const auto direct = explore(p, {});
    for (std::size_t v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.vertex(v).key, direct.vertex(v).key);
}

TEST(Explore, DeterministicAcrossWorkers) {
    const auto p = ClusterPattern::principal(a3, {2, 1, 1});
    ExploreLimits one, four;
    four.workers = 4;
    const auto a = explore(p, one), b = explore(p, four);
    ASSERT_EQ(a.vertex_count(), b.vertex_count());
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        EXPECT_EQ(a.vertex(v).key, b.vertex(v).key);
        EXPECT_EQ(a.vertex(v).neighbor, b.vertex(v).neighbor);
    }
}

TEST(Explore, InfiniteTypeTruncates) {
    // Kronecker-like rank 2 with b12 b21 = -4 is not of finite type.
    const auto p = ClusterPattern::principal(ExchangeMatrix{{0, 2}, {-2, 0}}, {1, 1});
    ExploreLimits limits;
    limits.max_depth = 6;
    const auto g = explore(p, limits);
    EXPECT_FALSE(g.is_complete());
    EXPECT_EQ(g.vertex_count(), 13u);
}

TEST(ConnectedSubgraph, Examples) {
    const auto g = explore(ClusterPattern::principal(a2, {1, 1}), {});
    const auto all = connected_subgraph(g, {});
    EXPECT_TRUE(all.connected);
    EXPECT_EQ(all.vertices.size(), 5u);
    const auto x1 = *g.find_variable(g.vertex(0).seed.x[0]);
    const auto with_x1 = connected_subgraph(g, {x1});
    EXPECT_TRUE(with_x1.connected);
    EXPECT_EQ(with_x1.vertices.size(), 2u);
    EXPECT_TRUE(verify_connected_subgraphs(g).passed());
    EXPECT_EQ(verify_connected_subgraphs(g).status(), "pass");
}

TEST(ConnectedSubgraph, TruncatedGraphIsNotAPass) {
    ExploreLimits limits;
    limits.max_depth = 1;
    const auto g = explore(ClusterPattern::principal(a2, {1, 1}), limits);
    EXPECT_EQ(verify_connected_subgraphs(g).status(), "no counterexample within horizon");
}

TEST(Compatibility, A2) {
    const auto p = ClusterPattern::principal(a2, {1, 1});
    const auto g = explore(p, {});
    const auto s0 = p.initial_seed();
    const auto x1p = p.seed_at({0}).x[0];
    const auto x2p = p.seed_at({1}).x[1];
    EXPECT_TRUE(compatibility(g, s0.x[0], s0.x[0]));
    EXPECT_FALSE(compatibility(g, s0.x[0], x1p));
    // Brute force over the five clusters for x1 and mu_2(x2).
    bool together = false;
    for (const auto& v : g.vertices()) {
        const bool a = std::any_of(v.seed.x.begin(), v.seed.x.end(), [&](const auto& x) { return x == s0.x[0]; });
        const bool b = std::any_of(v.seed.x.begin(), v.seed.x.end(), [&](const auto& x) { return x == x2p; });
        together = together || (a && b);
    }
    EXPECT_TRUE(together);
    EXPECT_EQ(compatibility(g, s0.x[0], x2p), together);
    EXPECT_THROW(compatibility(g, s0.x[0], s0.x[0] + s0.x[1]), unknown_variable);
}

TEST(DVectorTrichotomy, CompleteGraphs) {
    for (const auto& p : {ClusterPattern::principal(a2, {1, 1}), ClusterPattern::principal(a2, {2, 1}),
                          ClusterPattern::principal(a3, {1, 1, 1})}) {
        const auto g = explore(p, {});
        const DenominatorTable table(g);
        EXPECT_TRUE(table.inconsistencies().empty());
        for (std::size_t base = 0; base < g.vertex_count(); ++base) {
            const auto r = verify_dvector_trichotomy(g, base, table);
            ASSERT_TRUE(r.passed()) << r.violations.front();
        }
        // Initial variables have d = -e_i against t0.
        for (std::size_t i = 0; i < p.rank(); ++i) {
            const auto d = table.at(g.vertex(0).cluster[i], 0);
            for (std::size_t k = 0; k < p.rank(); ++k) EXPECT_EQ(d[k], k == i ? -1 : 0);
        }
    }
}

TEST(CompatibleSets, MaximalSetsAreClusters) {
    const auto g2 = explore(ClusterPattern::principal(a2, {1, 1}), {});
    const auto r2 = verify_compatible_sets(g2);
    EXPECT_TRUE(r2.passed());
    EXPECT_EQ(r2.counts.at("maximal compatible sets"), 5u);
    // Empty set, 5 singletons, 5 clusters.
    EXPECT_EQ(r2.counts.at("compatible sets"), 11u);
    const auto gg = explore(ClusterPattern::principal(a2, {2, 1}), {});
    const auto rg = verify_compatible_sets(gg);
    EXPECT_TRUE(rg.passed());
    EXPECT_EQ(rg.counts.at("maximal compatible sets"), gg.vertex_count());
}
