#include <gtest/gtest.h>

#include "json.hpp"

#include "radial/error.hpp"
#include "radial/io.hpp"
#include "radial/pipeline.hpp"
#include "radial/svg.hpp"
#include "suite.hpp"

namespace radial {
namespace {

LeveledGraph leveled(std::initializer_list<std::int64_t> levels, std::initializer_list<std::pair<int, int>> edges) {
    LeveledGraph g;
    int i = 0;
    for (auto l : levels) g.add_vertex("v" + std::to_string(++i), l);
    for (auto [a, b] : edges) g.add_edge("v" + std::to_string(a), "v" + std::to_string(b));
    return g;
}

TEST(Decide, PathIsYesWithEmptySystem) {
    const Verdict v = decide(leveled({1, 2, 3}, {{1, 2}, {2, 3}}));
    EXPECT_TRUE(v.radial_planar);
    EXPECT_TRUE(v.system.system.rows.empty());
    EXPECT_TRUE(verify_verdict(v));
}

TEST(Decide, FourCycleIsYes) {
    const Verdict v = decide(leveled({1, 2, 3, 4}, {{1, 3}, {3, 2}, {2, 4}, {4, 1}}));
    EXPECT_TRUE(v.radial_planar);
    EXPECT_EQ(v.system.system.rows.size(), 2u);
    EXPECT_TRUE(verify_verdict(v));
}

TEST(Decide, KuratowskiIsNoWithWitness) {
    for (bool k33 : {false, true}) {
        const Verdict v = decide(suite::kuratowski(k33, 0));
        EXPECT_FALSE(v.radial_planar);
        ASSERT_EQ(v.outcome.status, gf2::Status::Inconsistent);
        EXPECT_TRUE(gf2::verify_inconsistency(v.system.system, v.outcome.witness));
    }
}

TEST(Decide, IntraLevelEdgeForcesNo) {
    const Verdict v = decide(leveled({1, 1, 2}, {{1, 2}, {1, 3}}));
    EXPECT_FALSE(v.radial_planar);
    ASSERT_TRUE(v.forced_by.has_value());
    EXPECT_EQ(v.forced_by->code, "INTRA-LEVEL-EDGE");
    EXPECT_TRUE(verify_verdict(v));
}

TEST(Decide, InvalidInputAndOptions) {
    try {
        decide(leveled({1, 2}, {{1, 1}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
        EXPECT_EQ(e.location(), "/edges/0");
    }
    const LeveledGraph ok = leveled({1, 2}, {{1, 2}});
    EXPECT_THROW(decide(ok, {kSchemeCount, 0, gf2::Strategy::Dense, 0, 8}), Error);
    EXPECT_THROW(decide(ok, {0, 0, gf2::Strategy::Dense, 0, 0}), Error);
}

TEST(Decide, TiesAreAugmented) {
    const Verdict v = decide(leveled({1, 2, 2, 3}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
    ASSERT_TRUE(v.augmentation.has_value());
    EXPECT_TRUE(v.radial_planar);
    // Both tied vertices have edges up and down, so nothing is added.
    EXPECT_TRUE(v.augmentation->provenance.empty());
    EXPECT_EQ(v.augmentation->refinement.size(), 1u);

    const Verdict sinks = decide(leveled({1, 2, 2}, {{1, 2}, {1, 3}}));
    ASSERT_TRUE(sinks.augmentation.has_value());
    EXPECT_EQ(sinks.augmentation->provenance.size(), 2u);
    EXPECT_EQ(sinks.tested.vertex_count(), 5);
    EXPECT_TRUE(sinks.radial_planar);
}

TEST(Decide, Deterministic) {
    const LeveledGraph g = suite::random_leveled(12, 24, 9);
    const Verdict a = decide(g);
    const Verdict b = decide(g);
    EXPECT_EQ(a.radial_planar, b.radial_planar);
    EXPECT_EQ(a.outcome.assignment, b.outcome.assignment);
    EXPECT_EQ(a.outcome.witness, b.outcome.witness);
    EXPECT_EQ(verdict_json(a, true).size() > 0, true);
}

TEST(VerdictJson, FieldsAndOfflineCheck) {
    for (const LeveledGraph& g : {suite::kuratowski(true, 3), suite::random_leveled(8, 10, 2)}) {
        const Verdict v = decide(g);
        const std::string text = verdict_json(v);
        const auto doc = nlohmann::json::parse(text);
        EXPECT_EQ(doc["radial_planar"].get<bool>(), v.radial_planar);
        EXPECT_EQ(doc["verdict"].get<std::string>(), v.radial_planar ? "RADIAL-PLANAR" : "NOT-RADIAL-PLANAR");
        EXPECT_EQ(doc["system_size"]["rows"].get<std::size_t>(), v.system.system.rows.size());
        EXPECT_TRUE(doc.contains("certificate"));
        EXPECT_TRUE(check_verdict_json(text));

        // A tampered certificate must not re-check.
        auto bad = doc;
        if (v.radial_planar) {
            ASSERT_FALSE(bad["system"]["rows"].empty());
            bad["system"]["rows"][0]["rhs"] = 1 - bad["system"]["rows"][0]["rhs"].get<int>();
        } else {
            bad["certificate"]["rows"].erase(bad["certificate"]["rows"].begin());
        }
        EXPECT_FALSE(check_verdict_json(bad.dump()));

        const auto terse = nlohmann::json::parse(verdict_json(v, true));
        EXPECT_FALSE(terse.contains("certificate"));
        EXPECT_THROW(check_verdict_json(terse.dump()), Error);
    }
}

TEST(WitnessJson, RoundTrip) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const GeneratedInstance inst = generate_planar_instance(seed, {8, 12, 0, 64, 2});
        const GeometricEmbedding back = parse_witness(witness_json(inst.witness), inst.graph);
        EXPECT_EQ(back.windings, inst.witness.windings);
        ASSERT_EQ(back.slot.size(), inst.witness.slot.size());
        for (VertexIndex v = 0; v < back.slot.size(); ++v) EXPECT_EQ(back.angle(v), inst.witness.angle(v));
        EXPECT_TRUE(verify_embedding(back));
    }
    const LeveledGraph g = leveled({1, 2}, {{1, 2}});
    EXPECT_THROW(parse_witness(R"({"angles":{"v1":[0,1]},"windings":{"0":0}})", g), Error);
    EXPECT_THROW(parse_witness(R"({"angles":{"v1":[0,1],"v2":[1,0]},"windings":{"0":0}})", g), Error);
}

TEST(Svg, RendersDrawingsAndWitnesses) {
    const LeveledGraph g = suite::random_leveled(6, 9, 4);
    const std::string a = render_svg(canonical_drawing(to_ordered(g), 0));
    EXPECT_NE(a.find("<svg"), std::string::npos);
    EXPECT_NE(a.find("<line"), std::string::npos);
    const GeneratedInstance inst = generate_planar_instance(2, {6, 8, 0, 64, 1});
    EXPECT_NE(render_svg(inst.witness).find("</svg>"), std::string::npos);
}

// The verdict never depends on the drawing scheme or the solver engine.
TEST(DecideProperties, SchemeAndSolverInvariance) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const LeveledGraph g = suite::random_leveled(7, 9 + static_cast<int>(seed % 6), seed);
        const bool base = decide(g).radial_planar;
        for (int scheme = 1; scheme < kSchemeCount; ++scheme) {
            const Verdict v = decide(g, {scheme, 0, gf2::Strategy::Auto, seed, 8});
            EXPECT_EQ(v.radial_planar, base) << "seed " << seed << " scheme " << scheme;
            EXPECT_TRUE(verify_verdict(v));
        }
    }
}

}  // namespace
}  // namespace radial
