#include <benchmark/benchmark.h>

#include "inertia/eig.hpp"
#include "inertia/rng.hpp"
#include "inertia/svd.hpp"

using namespace inertia;

static void EigHermitian(benchmark::State& state) {
    Rng rng(1);
    const ComplexMatrix h = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        auto dec = eig_hermitian(h);
        benchmark::DoNotOptimize(dec.eigenvalues.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(EigHermitian)->DenseRange(4, 12, 2)->Complexity();

static void EigenvaluesOnly(benchmark::State& state) {
    Rng rng(1);
    const ComplexMatrix h = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        auto mu = hermitian_eigenvalues(h);
        benchmark::DoNotOptimize(mu.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(EigenvaluesOnly)->DenseRange(4, 12, 2)->Complexity();

static void JacobiSvd(benchmark::State& state) {
    Rng rng(2);
    const ComplexMatrix m =
        ginibre(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        auto dec = svd(m);
        benchmark::DoNotOptimize(dec.singular_values.data());
    }
}
BENCHMARK(JacobiSvd)->DenseRange(4, 12, 4);
