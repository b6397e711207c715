#include <benchmark/benchmark.h>

#include "vat/generators.hpp"
#include "vat/metrics.hpp"
#include "vat/spectral.hpp"
#include "vat/verifier.hpp"

namespace {

vat::Graph connected_cubic(int n) {
    for (std::uint64_t seed = 1;; ++seed) {
        auto g = vat::random_regular(n, 3, seed);
        if (vat::is_connected(g))
            return g;
    }
}

void BM_VatExact(benchmark::State& state) {
    const auto g = connected_cubic(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(vat::vat_exact(g));
}
BENCHMARK(BM_VatExact)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_ConductanceExact(benchmark::State& state) {
    const auto g = connected_cubic(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(vat::conductance_exact(g));
}
BENCHMARK(BM_ConductanceExact)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_AlphaBetaVatReal(benchmark::State& state) {
    const auto g = connected_cubic(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(vat::alpha_beta_vat_exact(g, 1.5, 0.5));
}
BENCHMARK(BM_AlphaBetaVatReal)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Lambda2(benchmark::State& state) {
    const auto g = connected_cubic(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(vat::lambda2(g));
}
BENCHMARK(BM_Lambda2)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_SweepConductance(benchmark::State& state) {
    const auto g = connected_cubic(static_cast<int>(state.range(0)));
    const auto spectrum = vat::lambda2(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(vat::sweep_conductance(g, spectrum));
}
BENCHMARK(BM_SweepConductance)->Arg(256)->Arg(1024);

void BM_AllChecks(benchmark::State& state) {
    const auto g = connected_cubic(static_cast<int>(state.range(0)));
    std::vector<vat::CorpusEntry> corpus = {{"g", g}};
    const auto checks = vat::all_checks();
    for (auto _ : state)
        benchmark::DoNotOptimize(vat::run_suite(corpus, checks));
}
BENCHMARK(BM_AllChecks)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
