#include <benchmark/benchmark.h>

#include "symineq/spectral.hpp"
#include "symineq/verify.hpp"

namespace {

void BM_jacobi(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const auto x = symineq::random_spd(dim, 3, 1e-1, 1e1);
    for (auto _ : state) benchmark::DoNotOptimize(symineq::jacobi_eigenvalues(x));
    state.SetComplexityN(dim);
}
BENCHMARK(BM_jacobi)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_matrix_power(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const auto x = symineq::random_spd(dim, 5, 1e-1, 1e1);
    for (auto _ : state) benchmark::DoNotOptimize(symineq::matrix_power(x, -0.5));
}
BENCHMARK(BM_matrix_power)->Arg(4)->Arg(8)->Arg(16);

void BM_muir_trial(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    symineq::RngStream s(17);
    const auto a = symineq::random_tall(s, dim, dim / 2 + 1);
    const auto x = symineq::random_spd(s, dim, 1e-1, 1e1);
    const auto y = symineq::random_spd(s, dim, 1e-1, 1e1);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            symineq::check_muir_logconvex(a, x, y, 1, -0.5, 1e-8));
}
BENCHMARK(BM_muir_trial)->Arg(2)->Arg(4)->Arg(6);

void BM_verify_trial_throughput(benchmark::State& state) {
    symineq::TrialConfig cfg;
    cfg.trials = static_cast<int>(state.range(0));
    cfg.seed = 21;
    const std::vector<std::string> ids{"ek-root"};
    for (auto _ : state) benchmark::DoNotOptimize(symineq::run_suite(cfg, ids));
    state.SetItemsProcessed(state.iterations() * cfg.trials * 5);  // 5 grid points
}
BENCHMARK(BM_verify_trial_throughput)->Arg(100)->Arg(1000);

}  // namespace
