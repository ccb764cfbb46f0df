#include <benchmark/benchmark.h>

#include "quadrica/linalg.hpp"
#include "quadrica/oracle.hpp"
#include "quadrica/rng.hpp"

namespace {

quadrica::FpMatrix random_square(std::size_t n, std::uint64_t seed) {
    quadrica::PrimeField f;
    quadrica::CounterRng rng(seed, 0);
    std::vector<std::uint64_t> d(n * n);
    for (auto& v : d) v = rng.next_residue(f);
    return quadrica::FpMatrix::from_residues(n, n, f, std::move(d));
}

void BM_RankPrimeField(benchmark::State& state) {
    auto m = random_square(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(quadrica::rank(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RankPrimeField)->RangeMultiplier(2)->Range(32, 256)->Complexity();

void BM_KernelBasis(benchmark::State& state) {
    auto m = random_square(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(quadrica::kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Arg(64)->Arg(128);

void BM_OracleDim(benchmark::State& state) {
    quadrica::WeightVector w(7, {4, 3, 3, 3});
    for (auto _ : state) {
        auto c = quadrica::random_configuration(w, quadrica::PrimeField::kDefaultPrime, 1);
        benchmark::DoNotOptimize(quadrica::dim_I2_exact(c));
    }
}
BENCHMARK(BM_OracleDim);

void BM_GenericDimLarge(benchmark::State& state) {
    quadrica::WeightVector w(9, {5, 5, 5});
    for (auto _ : state) {
        auto r = quadrica::generic_dim_I2(w, 3, quadrica::PrimeField::kDefaultPrime, 0);
        benchmark::DoNotOptimize(r.oracle_dim);
    }
}
BENCHMARK(BM_GenericDimLarge);

} // namespace

BENCHMARK_MAIN();
