#include <benchmark/benchmark.h>

#include "inertia/bipartite.hpp"
#include "inertia/rng.hpp"
#include "inertia/sampling.hpp"
#include "inertia/witness_search.hpp"

using namespace inertia;

static void PartialTranspose(benchmark::State& state) {
    const BipartiteDims dims{3, static_cast<std::size_t>(state.range(0))};
    const ComplexMatrix m = sample_state(dims, dims.product(), 3);
    for (auto _ : state) {
        auto t = partial_transpose(m, dims);
        benchmark::DoNotOptimize(t.entries().data());
    }
}
BENCHMARK(PartialTranspose)->DenseRange(3, 4, 1);

static void SearchObjectiveEval(benchmark::State& state) {
    const BipartiteDims dims{3, static_cast<std::size_t>(state.range(0))};
    const ComplexMatrix m = sample_state(dims, dims.product(), 7);
    const Inertia target{2, 0, dims.product() - 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_objective(m, dims, target, 1e-4));
    }
}
BENCHMARK(SearchObjectiveEval)->DenseRange(3, 4, 1);

static void CensusSample(benchmark::State& state) {
    const BipartiteDims dims{3, 4};
    std::uint64_t i = 0;
    for (auto _ : state) {
        Rng rng = Rng::stream(9, i++);
        const ComplexMatrix m = sample_state(dims, 12, rng);
        benchmark::DoNotOptimize(inertia_of(partial_transpose(m, dims)));
    }
}
BENCHMARK(CensusSample);

BENCHMARK_MAIN();
