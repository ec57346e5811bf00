#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "radial/graph.hpp"
#include "radial/pipeline.hpp"

namespace radial::suite {

// Instance families shared by the CLI, the acceptance binary and benchmarks.

/// K5 or K3,3 with vertices on distinct levels in a seeded random order.
/// seed 0 keeps the natural order.
LeveledGraph kuratowski(bool k33, std::uint64_t seed);

/// n vertices on levels 1..n and m random non-loop edges (parallel edges allowed).
LeveledGraph random_leveled(int n, int m, std::uint64_t seed, int levels = 0);

/// Every connected simple graph on ranks 1..n with at most max_m edges.
std::vector<OrderedGraph> connected_ordered_graphs(int n, int max_m);

/// Planted 3-per-row system; `inconsistent` flips the rhs of one row that
/// lies in a dependent row set.
struct SystemCase {
    gf2::GF2System system;
    bool planted_solvable = true;
};
SystemCase random_system(std::uint64_t seed, bool inconsistent);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteOptions {
    /// Where criterion 9 writes its CSV; empty disables the file.
    std::string bench_csv;
    std::uint64_t oracle_budget = 200'000'000;
    /// Criterion 4 also sweeps n = 6, m <= 8, where NO instances exist.
    bool supplementary = true;
};

CriterionResult golden_rows();                                   // 1
CriterionResult yes_soundness();                                 // 2
CriterionResult no_soundness();                                  // 3
CriterionResult oracle_agreement(const SuiteOptions& options);   // 4
CriterionResult solver_agreement();                              // 5
CriterionResult scheme_invariance();                             // 6
CriterionResult refinement_invariance();                         // 7
CriterionResult lemma_suite();                                   // 8
CriterionResult performance(const SuiteOptions& options);        // 9

/// Runs the criteria with the given ids in order and returns their results.
std::vector<CriterionResult> run(const std::vector<int>& ids, const SuiteOptions& options);

/// One `[PASS]`/`[FAIL]` line.
std::string format(const CriterionResult& r);

/// Bench CSV: header plus one line per decided instance.
std::string bench_csv_header();
std::string bench_csv_line(const std::string& name, const LeveledGraph& g, const Verdict& v, double wall_ms);

}  // namespace radial::suite
