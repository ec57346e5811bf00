#include <gtest/gtest.h>

#include <map>
#include <set>

#include "radial/error.hpp"
#include "radial/reduction.hpp"
#include "suite.hpp"

namespace radial {
namespace {

TEST(Reduction, DistinctLevelsUnchanged) {
    const LeveledGraph g = suite::random_leveled(7, 10, 5);
    const AugmentedInstance a = augment_and_refine(g, 99);
    const OrderedGraph o = to_ordered(g);
    EXPECT_FALSE(a.augmented());
    EXPECT_EQ(a.ordered.labels(), o.labels());
    ASSERT_EQ(a.ordered.edge_count(), o.edge_count());
    for (EdgeIndex e = 0; e < o.edge_count(); ++e) {
        EXPECT_EQ(a.ordered.edge(e).lo, o.edge(e).lo);
        EXPECT_EQ(a.ordered.edge(e).hi, o.edge(e).hi);
    }
    EXPECT_TRUE(lift_verdict(a, true));
    EXPECT_FALSE(lift_verdict(a, false));
}

TEST(Reduction, SinkGetsPendantAboveItsBand) {
    LeveledGraph g;
    g.add_vertex("a", 1);
    g.add_vertex("b", 2);
    g.add_vertex("c", 2);
    g.add_vertex("d", 3);
    g.add_edge("a", "b");
    g.add_edge("a", "c");
    g.add_edge("c", "d");
    const AugmentedInstance a = augment_and_refine(g, 0);
    ASSERT_EQ(a.provenance.size(), 1u);
    EXPECT_EQ(a.provenance[0].owner, 1u);
    EXPECT_TRUE(a.provenance[0].upper);
    EXPECT_EQ(a.ordered.labels(), (std::vector<std::string>{"a", "b", "c", "b#hi", "d"}));
    ASSERT_EQ(a.refinement.size(), 1u);
    EXPECT_EQ(a.refinement[0], (std::vector<VertexIndex>{1, 2}));
    ASSERT_EQ(a.ordered.edge_count(), 4u);
    EXPECT_EQ(a.ordered.edge(3).lo, 2);
    EXPECT_EQ(a.ordered.edge(3).hi, 4);
}

TEST(Reduction, IsolatedVertexOnSharedLevelGetsBoth) {
    LeveledGraph g;
    g.add_vertex("a", 1);
    g.add_vertex("b", 1);
    g.add_vertex("c", 2);
    g.add_edge("a", "c");
    const AugmentedInstance a = augment_and_refine(g, 0);
    int lower = 0, upper = 0;
    for (const auto& p : a.provenance) {
        if (p.owner != 1) continue;
        (p.upper ? upper : lower) += 1;
    }
    EXPECT_EQ(lower, 1);
    EXPECT_EQ(upper, 1);
}

TEST(Reduction, PendantIdsStayUnique) {
    LeveledGraph g;
    g.add_vertex("a", 1);
    g.add_vertex("a#hi", 1);
    const AugmentedInstance a = augment_and_refine(g, 0);
    const auto& labels = a.ordered.labels();
    EXPECT_EQ(std::set<std::string>(labels.begin(), labels.end()).size(), labels.size());
}

TEST(Reduction, RejectsIntraLevelEdges) {
    LeveledGraph g;
    g.add_vertex("a", 1);
    g.add_vertex("b", 1);
    g.add_edge("a", "b");
    EXPECT_THROW(augment_and_refine(g, 0), Error);
}

// Invariants from an independent recount on random tied instances.
TEST(ReductionProperties, PendantCountAndRecovery) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int n = 3 + static_cast<int>(seed % 9);
        const LeveledGraph g = suite::random_leveled(n, n + static_cast<int>(seed % 5), seed, std::max(2, n / 2));
        std::map<std::int64_t, int> per_level;
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) ++per_level[g.level(v)];
        std::size_t expected = 0;
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
            if (per_level[g.level(v)] < 2) continue;
            bool up = false, down = false;
            for (const Edge& e : g.edges()) {
                if (e.a != v && e.b != v) continue;
                const VertexIndex o = e.a == v ? e.b : e.a;
                (g.level(o) > g.level(v) ? up : down) = true;
            }
            expected += (up ? 0 : 1) + (down ? 0 : 1);
        }

        const AugmentedInstance a = augment_and_refine(g, seed);
        ASSERT_EQ(a.provenance.size(), expected) << "seed " << seed;
        ASSERT_EQ(a.ordered.edge_count(), g.edge_count() + expected);

        // Each pendant vertex has degree one and hangs off its owner.
        std::vector<int> degree(static_cast<std::size_t>(a.ordered.vertex_count()) + 1, 0);
        for (const OrderedEdge& e : a.ordered.edges()) {
            ++degree[static_cast<std::size_t>(e.lo)];
            ++degree[static_cast<std::size_t>(e.hi)];
        }
        for (std::size_t k = 0; k < a.provenance.size(); ++k) {
            const PendantOrigin& p = a.provenance[k];
            EXPECT_EQ(degree[static_cast<std::size_t>(p.rank)], 1);
            const OrderedEdge& e = a.ordered.edge(a.original_edge_count + k);
            const int owner_rank = e.lo == p.rank ? e.hi : e.lo;
            EXPECT_EQ(a.origin_of_rank[static_cast<std::size_t>(owner_rank - 1)], p.owner);
            EXPECT_EQ(p.upper, p.rank > owner_rank);
        }

        // Dropping pendants and mapping ranks back recovers the input edges.
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            const OrderedEdge& oe = a.ordered.edge(e);
            const VertexIndex x = a.origin_of_rank[static_cast<std::size_t>(oe.lo - 1)];
            const VertexIndex y = a.origin_of_rank[static_cast<std::size_t>(oe.hi - 1)];
            EXPECT_EQ(std::minmax(x, y), std::minmax(g.edges()[e].a, g.edges()[e].b));
        }
        // Ranks respect levels.
        std::int64_t last = 0;
        for (VertexIndex v : a.origin_of_rank) {
            if (v == AugmentedInstance::kPendant) continue;
            EXPECT_LE(last, g.level(v));
            last = g.level(v);
        }
    }
}

TEST(ReductionProperties, SeedsOnlyPermuteWithinBands) {
    const LeveledGraph g = suite::random_leveled(10, 12, 77, 4);
    const AugmentedInstance a = augment_and_refine(g, 0);
    for (std::uint64_t seed : {1ULL, 2ULL, 12345ULL}) {
        const AugmentedInstance b = augment_and_refine(g, seed);
        ASSERT_EQ(a.ordered.vertex_count(), b.ordered.vertex_count());
        ASSERT_EQ(a.ordered.edge_count(), b.ordered.edge_count());
        std::multiset<std::pair<VertexIndex, bool>> pa, pb;
        for (const auto& p : a.provenance) pa.emplace(p.owner, p.upper);
        for (const auto& p : b.provenance) pb.emplace(p.owner, p.upper);
        EXPECT_EQ(pa, pb);
        EXPECT_EQ(b.seed, seed);
        ASSERT_EQ(a.refinement.size(), b.refinement.size());
        for (std::size_t i = 0; i < a.refinement.size(); ++i) {
            EXPECT_EQ(std::multiset<VertexIndex>(a.refinement[i].begin(), a.refinement[i].end()),
                      std::multiset<VertexIndex>(b.refinement[i].begin(), b.refinement[i].end()));
        }
    }
}

}  // namespace
}  // namespace radial
