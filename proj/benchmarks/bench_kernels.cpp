#include <benchmark/benchmark.h>

#include <vector>

#include "symineq/funcs.hpp"
#include "symineq/mc.hpp"
#include "symineq/rng.hpp"
#include "symineq/sympoly.hpp"

namespace {

symineq::Vec random_vec(int n, double lo, double hi, std::uint64_t seed = 7) {
    symineq::RngStream s(seed);
    symineq::Vec x(n);
    for (double& v : x) v = s.log_uniform(lo, hi);
    return x;
}

void BM_elem_sym(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto x = random_vec(n, 1e-2, 1e2);
    for (auto _ : state) benchmark::DoNotOptimize(symineq::elem_sym(x, n / 2));
    state.SetComplexityN(n);
}
BENCHMARK(BM_elem_sym)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_elem_sym_log(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto x = random_vec(n, 1e-2, 1e2);
    for (auto _ : state) benchmark::DoNotOptimize(symineq::elem_sym_log(x, n / 2));
    state.SetComplexityN(n);
}
BENCHMARK(BM_elem_sym_log)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_brute_elem_sym(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto x = random_vec(n, 1e-2, 1e2);
    for (auto _ : state) benchmark::DoNotOptimize(symineq::brute_elem_sym(x, n / 2));
}
BENCHMARK(BM_brute_elem_sym)->DenseRange(8, 16, 4);

void BM_complete_hom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto x = random_vec(n, 1e-2, 1e2);
    for (auto _ : state) benchmark::DoNotOptimize(symineq::complete_hom(x, 8));
}
BENCHMARK(BM_complete_hom)->RangeMultiplier(2)->Range(8, 64);

void BM_phi(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto x = random_vec(n, 1e-2, 1e2);
    for (auto _ : state) benchmark::DoNotOptimize(symineq::phi(x, n / 2, 0.5));
}
BENCHMARK(BM_phi)->RangeMultiplier(2)->Range(8, 64);

void BM_estimate_hk(benchmark::State& state) {
    const auto x = random_vec(4, 0.1, 10.0);
    const auto samples = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(symineq::estimate_hk(x, 4, samples, 11));
    state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_estimate_hk)->Arg(1 << 14)->Arg(1 << 18);

}  // namespace

int main(int argc, char** argv) {
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    return 0;
}
