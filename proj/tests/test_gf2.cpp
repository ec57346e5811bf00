#include <gtest/gtest.h>

#include <random>

#include "radial/error.hpp"
#include "radial/gf2.hpp"
#include "suite.hpp"

namespace radial::gf2 {
namespace {

/// Textbook elimination on vector<vector<bool>>: rank of A and of [A | b].
std::pair<std::size_t, std::size_t> textbook_ranks(const GF2System& s) {
    std::vector<std::vector<bool>> m;
    for (const Row& r : s.rows) {
        std::vector<bool> row(s.cols + 1, false);
        for (auto c : r.support) row[c] = !row[c];
        row[s.cols] = r.rhs;
        m.push_back(row);
    }
    auto rank_of = [&](std::size_t width) {
        auto a = m;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < width && rank < a.size(); ++c) {
            std::size_t p = rank;
            while (p < a.size() && !a[p][c]) ++p;
            if (p == a.size()) continue;
            std::swap(a[p], a[rank]);
            for (std::size_t r = 0; r < a.size(); ++r) {
                if (r == rank || !a[r][c]) continue;
                for (std::size_t k = 0; k <= s.cols; ++k) a[r][k] = a[r][k] != a[rank][k];
            }
            ++rank;
        }
        return rank;
    };
    return {rank_of(s.cols), rank_of(s.cols + 1)};
}

GF2System random_dense(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int per_row) {
    GF2System s;
    s.cols = cols;
    for (std::size_t r = 0; r < rows; ++r) {
        Row row;
        for (int k = 0; k < per_row; ++k) row.support.push_back(static_cast<std::uint32_t>(rng() % cols));
        row.rhs = rng() & 1U;
        s.rows.push_back(row);
    }
    return s;
}

TEST(BitVector, Basics) {
    BitVector v(130);
    v.set(0);
    v.set(129);
    EXPECT_EQ(v.count(), 2u);
    EXPECT_EQ(v.ones(), (std::vector<std::size_t>{0, 129}));
    v.flip(129);
    EXPECT_FALSE(v.get(129));
    EXPECT_EQ(BitVector::from_string("0110").to_string(), "0110");
    EXPECT_TRUE(BitVector::from_string("0110").dot(BitVector::from_string("0100")));
    EXPECT_FALSE(BitVector(70).any());
}

TEST(SolveDense, NoRows) {
    GF2System s;
    s.cols = 5;
    const SolveOutcome out = solve_dense(s);
    EXPECT_EQ(out.status, Status::Solvable);
    EXPECT_EQ(out.assignment.size(), 5u);
    EXPECT_EQ(out.rank, 0u);
}

TEST(SolveDense, EmptyRowWithOddRhs) {
    GF2System s;
    s.cols = 3;
    s.rows.push_back({{0, 1}, false});
    s.rows.push_back({{}, true});
    const SolveOutcome out = solve_dense(s);
    ASSERT_EQ(out.status, Status::Inconsistent);
    EXPECT_EQ(out.witness.to_string(), "01");
    EXPECT_TRUE(verify_inconsistency(s, out.witness));
}

TEST(SolveDense, RepeatedColumnCancels) {
    GF2System s;
    s.cols = 2;
    s.rows.push_back({{1, 1}, true});
    const SolveOutcome out = solve_dense(s);
    EXPECT_EQ(out.status, Status::Inconsistent);
}

TEST(SolveDense, SmallInconsistentTriangle) {
    GF2System s;
    s.cols = 3;
    s.rows.push_back({{0, 1}, false});
    s.rows.push_back({{1, 2}, false});
    s.rows.push_back({{0, 2}, true});
    const SolveOutcome out = solve_dense(s);
    ASSERT_EQ(out.status, Status::Inconsistent);
    EXPECT_EQ(out.witness.to_string(), "111");
}

TEST(Certificates, LengthMismatch) {
    GF2System s;
    s.cols = 2;
    s.rows.push_back({{0}, true});
    try {
        verify_inconsistency(s, BitVector(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
    }
    EXPECT_THROW(verify_certificate(s, BitVector(1)), Error);
}

// Rank and consistency against the textbook oracle.
TEST(SolveDenseProperties, MatchesTextbookElimination) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const std::size_t rows = 1 + rng() % 60;
        const std::size_t cols = 1 + rng() % 70;
        const GF2System s = random_dense(rng, rows, cols, 1 + static_cast<int>(rng() % 5));
        const auto [rank_a, rank_ab] = textbook_ranks(s);
        const SolveOutcome out = solve_dense(s);
        EXPECT_EQ(out.rank, rank_a) << t;
        EXPECT_EQ(out.status == Status::Solvable, rank_a == rank_ab) << t;
        if (out.status == Status::Solvable)
            EXPECT_TRUE(verify_certificate(s, out.assignment));
        else
            EXPECT_TRUE(verify_inconsistency(s, out.witness));
    }
}

TEST(SolveDenseProperties, PlantedSolutionsAreFound) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        GF2System s = random_dense(rng, 50, 60, 3);
        BitVector x(60);
        for (std::size_t i = 0; i < 60; ++i) x.set(i, rng() & 1U);
        for (Row& r : s.rows) {
            bool v = false;
            for (auto c : r.support) v ^= x.get(c);
            r.rhs = v;
        }
        const SolveOutcome out = solve_dense(s);
        ASSERT_EQ(out.status, Status::Solvable);
        EXPECT_TRUE(verify_certificate(s, out.assignment));
    }
}

TEST(FindRowDependency, Examples) {
    GF2System s;
    s.cols = 3;
    s.rows.push_back({{0, 1}, false});
    s.rows.push_back({{1, 2}, false});
    EXPECT_FALSE(find_row_dependency(s).has_value());
    s.rows.push_back({{0, 2}, false});
    const auto y = find_row_dependency(s);
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(y->to_string(), "111");
}

TEST(SolveSparse, PlantedSystemsMostlySolve) {
    int solved = 0;
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GF2System s = random_dense(rng, 200, 220, 3);
        BitVector x(220);
        for (std::size_t i = 0; i < 220; ++i) x.set(i, rng() & 1U);
        for (Row& r : s.rows) {
            bool v = false;
            for (auto c : r.support) v ^= x.get(c);
            r.rhs = v;
        }
        const SolveOutcome out = solve_sparse(s, seed, 8);
        EXPECT_NE(out.status, Status::Inconsistent);
        if (out.status == Status::Solvable) {
            EXPECT_TRUE(verify_certificate(s, out.assignment));
            ++solved;
        }
    }
    EXPECT_GE(solved, 95);
}

TEST(SolveSparse, NeverClaimsInconsistentSystemsSolvable) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const suite::SystemCase c = suite::random_system(seed, true);
        const SolveOutcome out = solve_sparse(c.system, seed, 4);
        EXPECT_EQ(out.status, Status::Unknown) << seed;
    }
}

TEST(Solve, StrategiesAgreeAndNeverReturnUnknown) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const suite::SystemCase c = suite::random_system(seed, seed % 2 == 0);
        const SolveOutcome dense = solve(c.system, Strategy::Dense);
        EXPECT_EQ(dense.engine, Engine::Dense);
        for (Strategy st : {Strategy::Sparse, Strategy::Auto}) {
            const SolveOutcome out = solve(c.system, st, seed, 8);
            ASSERT_NE(out.status, Status::Unknown);
            EXPECT_EQ(out.status, dense.status) << seed;
            if (out.status == Status::Inconsistent) {
                EXPECT_EQ(out.engine, Engine::Dense);
                EXPECT_GT(out.sparse_trials, 0);
                EXPECT_TRUE(verify_inconsistency(c.system, out.witness));
            } else {
                EXPECT_TRUE(verify_certificate(c.system, out.assignment));
            }
        }
        EXPECT_EQ(dense.status == Status::Solvable, c.planted_solvable);
    }
}

TEST(Strategy, ParseAndPrint) {
    EXPECT_EQ(parse_strategy("auto"), Strategy::Auto);
    EXPECT_EQ(parse_strategy("dense"), Strategy::Dense);
    EXPECT_FALSE(parse_strategy("fast").has_value());
    EXPECT_EQ(to_string(Status::Inconsistent), "INCONSISTENT");
}

/// Brute force: shortest L and some connection polynomial of length L that
/// generates the sequence.
std::size_t shortest_lfsr(const std::vector<std::uint8_t>& seq) {
    for (std::size_t len = 0; len <= seq.size(); ++len) {
        for (std::uint32_t mask = 0; mask < (1U << len); ++mask) {
            bool ok = true;
            for (std::size_t j = len; j < seq.size() && ok; ++j) {
                int v = 0;
                for (std::size_t i = 1; i <= len; ++i) v ^= ((mask >> (i - 1)) & 1U) * seq[j - i];
                ok = v == seq[j];
            }
            if (ok) return len;
        }
    }
    return seq.size();
}

TEST(BerlekampMassey, MatchesBruteForce) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 300; ++t) {
        std::vector<std::uint8_t> seq(1 + rng() % 14);
        for (auto& b : seq) b = rng() & 1U;
        const auto c = berlekamp_massey(seq);
        ASSERT_FALSE(c.empty());
        EXPECT_EQ(c[0], 1);
        const std::size_t len = c.size() - 1;
        for (std::size_t j = len; j < seq.size(); ++j) {
            int v = 0;
            for (std::size_t i = 1; i <= len; ++i) v ^= c[i] * seq[j - i];
            EXPECT_EQ(v, seq[j]);
        }
        EXPECT_EQ(len, shortest_lfsr(seq)) << t;
    }
}

TEST(TextFormat, RejectsBadInput) {
    EXPECT_THROW(import_text("2 1\n1 5\n"), Error);
    EXPECT_THROW(import_text("x"), Error);
    const GF2System s = import_text("3 1\n1 0 2\n");
    EXPECT_EQ(s.cols, 3u);
    ASSERT_EQ(s.rows.size(), 1u);
    EXPECT_TRUE(s.rows[0].rhs);
}

}  // namespace
}  // namespace radial::gf2
