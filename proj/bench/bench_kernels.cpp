#include <benchmark/benchmark.h>

#include <omp.h>

#include "arak/census.hpp"
#include "arak/cubic.hpp"
#include "arak/fuzz.hpp"

using namespace arak;

namespace {

CubicSeed desk_seed() {
    CubicSeed s;
    s.a = 8573;
    s.b = -18461;
    s.c = 8432;
    s.d = 1461;
    return s;
}

CubicSeed small_seed() {
    CubicSeed s;
    s.a = 5;
    s.b = 2;
    s.c = -9;
    s.d = -2;
    return s;
}

void BM_FuzzSerial(benchmark::State& state) {
    FuzzParams p;
    p.count = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_fuzz_serial(p));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

void BM_FuzzParallel(benchmark::State& state) {
    FuzzParams p;
    p.count = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_fuzz_parallel(p));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
    state.counters["threads"] = omp_get_max_threads();
}

void BM_CensusReference(benchmark::State& state) {
    const CubicLattice L = build_cubic_lattice(small_seed());
    for (auto _ : state) benchmark::DoNotOptimize(count_G_cubic_reference(L, CensusParams{}));
}

void BM_CensusSlabs(benchmark::State& state) {
    const CubicLattice L = build_cubic_lattice(small_seed());
    for (auto _ : state) benchmark::DoNotOptimize(count_G_cubic(L, CensusParams{}));
}

void BM_CensusDesk(benchmark::State& state) {
    const CubicLattice L = build_cubic_lattice(desk_seed());
    std::uint64_t examined = 0;
    for (auto _ : state) examined += count_G_cubic(L, CensusParams{}).examined;
    state.SetItemsProcessed(static_cast<std::int64_t>(examined));
    state.counters["threads"] = omp_get_max_threads();
}

void BM_LatticeBuild(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_cubic_lattice(desk_seed(), static_cast<unsigned>(state.range(0))));
}

} // namespace

BENCHMARK(BM_FuzzSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FuzzParallel)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSlabs)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusDesk)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LatticeBuild)->Arg(128)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
