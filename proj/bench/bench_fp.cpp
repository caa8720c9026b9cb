// Compares the serial and OpenMP matrix product kernels used by the
// character table engine.  Run: bench_fp [--benchmark_filter=...]

#include "nker/fp.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using nker::fp::Matrix;
using nker::fp::PrimeField;

Matrix random_matrix(int n, uint64_t p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix m(n, n);
    for (auto& x : m.a) x = rng() % p;
    return m;
}

void bench_mul_serial(benchmark::State& state) {
    const int n = int(state.range(0));
    PrimeField F{2013265921};
    Matrix A = random_matrix(n, F.p, 1);
    Matrix B = random_matrix(n, F.p, 2);
    for (auto _ : state) {
        Matrix C = nker::fp::mul_serial(F, A, B);
        benchmark::DoNotOptimize(C.a.data());
    }
    state.SetComplexityN(n);
}

void bench_mul_parallel(benchmark::State& state) {
    const int n = int(state.range(0));
    PrimeField F{2013265921};
    Matrix A = random_matrix(n, F.p, 1);
    Matrix B = random_matrix(n, F.p, 2);
    for (auto _ : state) {
        Matrix C = nker::fp::mul_parallel(F, A, B);
        benchmark::DoNotOptimize(C.a.data());
    }
    state.SetComplexityN(n);
}

BENCHMARK(bench_mul_serial)->Arg(64)->Arg(128)->Arg(256)->Complexity();
BENCHMARK(bench_mul_parallel)->Arg(64)->Arg(128)->Arg(256)->Complexity();

} // namespace

BENCHMARK_MAIN();
