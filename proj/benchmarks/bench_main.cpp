#include <benchmark/benchmark.h>

#include <random>

#include "casson/cohomology.hpp"
#include "casson/maslov.hpp"
#include "casson/splice.hpp"
#include "casson/torusop.hpp"

using namespace casson;

static void BM_Enumerate(benchmark::State& state) {
    const int q1 = static_cast<int>(state.range(0)), q2 = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_isolated(q1, q2));
}
BENCHMARK(BM_Enumerate)->Args({3, 3})->Args({5, 7})->Args({9, 9})->Unit(benchmark::kMillisecond);

static void BM_KlassenRep(benchmark::State& state) {
    double s = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(klassen_rep(7, 3, s));
        s = s > 0.98 ? 0.01 : s + 0.01;
    }
}
BENCHMARK(BM_KlassenRep);

static void BM_CohomologyDims(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto rep = sample_rep(RepCase::irreducible, 5, rng);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(rep));
}
BENCHMARK(BM_CohomologyDims);

static void BM_TruncatedSpectrum(benchmark::State& state) {
    const auto p = HolonomyParam::make({0.5, -0.5, 0}, {0.5, -0.5, 0});
    const int nmax = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(truncated_spectrum(p, 3, nmax));
}
BENCHMARK(BM_TruncatedSpectrum)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_TripleIndex(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto sp = SymplecticSpace::standard(n);
    std::mt19937_64 rng(2);
    const auto l1 = random_lagrangian(sp, rng), l2 = random_lagrangian(sp, rng), l3 = random_lagrangian(sp, rng);
    for (auto _ : state) benchmark::DoNotOptimize(triple_index(sp, l1, l2, l3));
}
BENCHMARK(BM_TripleIndex)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
