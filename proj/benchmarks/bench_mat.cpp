#include <benchmark/benchmark.h>

#include "latk/lattice.hpp"

using namespace latk;

static void BM_SmithNormalForm(benchmark::State& state) {
    ZMat G = from_dsl("E8 + A7 + D5").gram;
    for (auto _ : state) {
        ZMat U, V;
        benchmark::DoNotOptimize(snf(G, U, V));
    }
}
BENCHMARK(BM_SmithNormalForm);

static void BM_Determinant(benchmark::State& state) {
    ZMat G = from_dsl("E8^3").gram;
    for (auto _ : state) benchmark::DoNotOptimize(det(G));
}
BENCHMARK(BM_Determinant);

BENCHMARK_MAIN();
