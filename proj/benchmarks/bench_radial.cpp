#include <benchmark/benchmark.h>

#include "radial/drawing.hpp"
#include "radial/gf2.hpp"
#include "radial/ht_system.hpp"
#include "radial/oracle.hpp"
#include "radial/pipeline.hpp"
#include "suite.hpp"

namespace {

using namespace radial;

HtSystem system_of(int n, int m, std::uint64_t seed) {
    const OrderedGraph g = to_ordered(suite::random_leveled(n, m, seed));
    return build_system(g, parity_matrix(canonical_drawing(g, 0)), VarIndex(g));
}

void BM_Decide(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LeveledGraph g = suite::random_leveled(n, 2 * n, 60120);
    for (auto _ : state) benchmark::DoNotOptimize(decide(g).radial_planar);
}
BENCHMARK(BM_Decide)->Arg(20)->Arg(40)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_CanonicalDrawing(benchmark::State& state) {
    const OrderedGraph g = to_ordered(suite::random_leveled(static_cast<int>(state.range(0)), 120, 1));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_drawing(g, 0).curves.size());
}
BENCHMARK(BM_CanonicalDrawing)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_ParityMatrix(benchmark::State& state) {
    const OrderedGraph g = to_ordered(suite::random_leveled(60, static_cast<int>(state.range(0)), 1));
    const CanonicalDrawing d = canonical_drawing(g, 0);
    for (auto _ : state) benchmark::DoNotOptimize(parity_matrix(d).size());
}
BENCHMARK(BM_ParityMatrix)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_SolveDense(benchmark::State& state) {
    const HtSystem s = system_of(60, static_cast<int>(state.range(0)), 60120);
    for (auto _ : state) benchmark::DoNotOptimize(gf2::solve_dense(s.system).status);
    state.counters["rows"] = static_cast<double>(s.system.rows.size());
    state.counters["cols"] = static_cast<double>(s.system.cols);
}
BENCHMARK(BM_SolveDense)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

// Planar instances keep the system consistent, where the sparse engine applies.
void BM_SolveSparseVsDense(benchmark::State& state) {
    const bool sparse = state.range(0) != 0;
    const GeneratedInstance inst = generate_planar_instance(5, {60, 120, 0, 1024, 1});
    const OrderedGraph g = to_ordered(inst.graph);
    const HtSystem s = build_system(g, parity_matrix(canonical_drawing(g, 0)), VarIndex(g));
    for (auto _ : state) {
        const auto out = sparse ? gf2::solve_sparse(s.system, 1, 8) : gf2::solve_dense(s.system);
        benchmark::DoNotOptimize(out.status);
    }
    state.SetLabel(sparse ? "sparse" : "dense");
}
BENCHMARK(BM_SolveSparseVsDense)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
