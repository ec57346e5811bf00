#include <gtest/gtest.h>

#include <random>
#include <set>

#include "radial/error.hpp"
#include "radial/ht_system.hpp"
#include "suite.hpp"

namespace radial {
namespace {

OrderedGraph ordered(int n, std::initializer_list<std::pair<int, int>> edges) {
    OrderedGraph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

HtSystem system_for(const OrderedGraph& g, int scheme = 0) {
    return build_system(g, parity_matrix(canonical_drawing(g, scheme)), index_variables(g));
}

/// Same matrix, given right-hand side.
gf2::GF2System with_rhs(gf2::GF2System s, const std::vector<bool>& rhs) {
    for (std::size_t r = 0; r < s.rows.size(); ++r) s.rows[r].rhs = rhs[r];
    return s;
}

TEST(VarIndex, Counts) {
    EXPECT_EQ(index_variables(ordered(2, {{1, 2}})).size(), 1u);

    const VarIndex long_edge = index_variables(ordered(4, {{1, 4}}));
    EXPECT_EQ(long_edge.size(), 3u);
    EXPECT_EQ(long_edge.switch_var(0, 2), 0u);
    EXPECT_EQ(long_edge.switch_var(0, 3), 1u);
    EXPECT_EQ(long_edge.twist_var(0), 2u);
    EXPECT_THROW(long_edge.switch_var(0, 4), Error);

    const VarIndex cycle = index_variables(ordered(4, {{1, 3}, {2, 3}, {2, 4}, {1, 4}}));
    EXPECT_EQ(cycle.switch_count(), 4u);
    EXPECT_EQ(cycle.size(), 8u);
}

TEST(BuildSystem, InterleavedGoldenRow) {
    const OrderedGraph g = ordered(4, {{1, 3}, {2, 4}});
    const VarIndex ix(g);
    const HtSystem s = system_for(g);
    ASSERT_EQ(s.system.rows.size(), 1u);
    const auto& row = s.system.rows[0];
    EXPECT_EQ(std::set<std::uint32_t>(row.support.begin(), row.support.end()),
              (std::set<std::uint32_t>{ix.switch_var(0, 2), ix.switch_var(1, 3), ix.twist_var(0)}));
    EXPECT_TRUE(row.rhs);
    EXPECT_FALSE(s.origin[0].nested);
}

TEST(BuildSystem, NestedGoldenRow) {
    const OrderedGraph g = ordered(4, {{1, 4}, {2, 3}});
    const VarIndex ix(g);
    const HtSystem s = system_for(g);
    ASSERT_EQ(s.system.rows.size(), 1u);
    const auto& row = s.system.rows[0];
    EXPECT_EQ(std::set<std::uint32_t>(row.support.begin(), row.support.end()),
              (std::set<std::uint32_t>{ix.switch_var(0, 2), ix.switch_var(0, 3), ix.twist_var(1)}));
    EXPECT_TRUE(s.origin[0].nested);
}

TEST(BuildSystem, PairOrderDoesNotMatter) {
    // Same pair, higher-starting edge listed first.
    const OrderedGraph g = ordered(4, {{2, 4}, {1, 3}});
    const VarIndex ix(g);
    const HtSystem s = system_for(g);
    ASSERT_EQ(s.origin.size(), 1u);
    EXPECT_EQ(s.origin[0].e, 1u);
    EXPECT_EQ(std::set<std::uint32_t>(s.system.rows[0].support.begin(), s.system.rows[0].support.end()),
              (std::set<std::uint32_t>{ix.switch_var(1, 2), ix.switch_var(0, 3), ix.twist_var(1)}));
}

TEST(BuildSystem, PathGivesEmptySystem) {
    const HtSystem s = system_for(ordered(3, {{1, 2}, {2, 3}}));
    EXPECT_TRUE(s.system.rows.empty());
    EXPECT_EQ(gf2::solve_dense(s.system).status, gf2::Status::Solvable);
}

TEST(BuildSystem, RejectsUnnormalizableEntry) {
    const OrderedGraph g = ordered(4, {{1, 2}, {3, 4}});
    CrossingParityMatrix cr;
    cr.entries.push_back({0, 1, true});
    EXPECT_THROW(build_system(g, cr, VarIndex(g)), Error);
}

TEST(VerifyCertificate, Examples) {
    gf2::GF2System empty;
    EXPECT_TRUE(gf2::verify_certificate(empty, gf2::BitVector(0)));
    gf2::GF2System one;
    one.cols = 4;
    one.rows.push_back({{0, 1, 2}, true});
    EXPECT_TRUE(gf2::verify_certificate(one, gf2::BitVector::from_string("1000")));
    EXPECT_FALSE(gf2::verify_certificate(one, gf2::BitVector::from_string("1100")));
    EXPECT_THROW(gf2::verify_certificate(one, gf2::BitVector(3)), Error);
}

TEST(SystemProperties, RowShapeAndTextRoundTrip) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const OrderedGraph g = to_ordered(suite::random_leveled(10, 18, seed));
        const HtSystem s = system_for(g, static_cast<int>(seed % kSchemeCount));
        for (const auto& row : s.system.rows) {
            ASSERT_EQ(row.support.size(), 3u);
            EXPECT_EQ(std::set<std::uint32_t>(row.support.begin(), row.support.end()).size(), 3u);
            for (auto c : row.support) EXPECT_LT(c, s.system.cols);
        }
        const gf2::GF2System back = gf2::import_text(gf2::export_text(s.system));
        EXPECT_EQ(back.cols, s.system.cols);
        ASSERT_EQ(back.rows.size(), s.system.rows.size());
        for (std::size_t r = 0; r < back.rows.size(); ++r) {
            EXPECT_EQ(back.rows[r].support, s.system.rows[r].support);
            EXPECT_EQ(back.rows[r].rhs, s.system.rows[r].rhs);
        }
    }
}

// Redrawing the graph must move the parity vector inside the column space:
// any two radial drawings differ by switches and twists.
TEST(SystemProperties, RhsChangeFromAnyRedrawingIsInColumnSpace) {
    std::mt19937_64 rng(8);
    int redrawn = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int n = 4 + static_cast<int>(seed % 8);
        const OrderedGraph g = to_ordered(suite::random_leveled(n, 2 * n, seed));
        const CanonicalDrawing base = canonical_drawing(g, 0);
        const HtSystem s = build_system(g, parity_matrix(base), VarIndex(g));

        std::vector<Rational> angles;
        for (int i = 0; i < n; ++i) angles.emplace_back(static_cast<std::int64_t>(rng() % 1009), 1009);
        CanonicalDrawing other = drawing_from_angles(g, angles);
        for (auto& c : other.curves) c.delta += Rational(static_cast<std::int64_t>(rng() % 5) - 2);
        if (find_degeneracy(other)) continue;
        ++redrawn;
        const CrossingParityMatrix cr2 = parity_matrix(other);
        ASSERT_EQ(cr2.size(), s.system.rows.size());
        std::vector<bool> diff;
        for (std::size_t r = 0; r < cr2.size(); ++r) diff.push_back(cr2.entries[r].odd != s.system.rows[r].rhs);
        EXPECT_EQ(gf2::solve_dense(with_rhs(s.system, diff)).status, gf2::Status::Solvable) << "seed " << seed;
    }
    EXPECT_GT(redrawn, 40);
}

// One twist of e near its upper end: flip cr(e, f) for every constrained f
// whose span contains a height just below that end.
TEST(SystemProperties, TwistNearUpperEndKeepsSolvability) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const OrderedGraph g = to_ordered(suite::random_leveled(9, 16, seed));
        const HtSystem s = system_for(g);
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            const int v = g.edge(e).hi;
            std::vector<bool> flip;
            for (const auto& o : s.origin) {
                const EdgeIndex other = o.e == e ? o.f : (o.f == e ? o.e : SIZE_MAX);
                flip.push_back(other != SIZE_MAX && g.edge(other).lo < v && g.edge(other).hi >= v);
            }
            EXPECT_EQ(gf2::solve_dense(with_rhs(s.system, flip)).status, gf2::Status::Solvable)
                << "seed " << seed << " edge " << e;
        }
    }
}

}  // namespace
}  // namespace radial
