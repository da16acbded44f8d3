#include <benchmark/benchmark.h>

#include "tmcore/entropy.hpp"
#include "tmcore/potential.hpp"
#include "tmcore/pressure.hpp"
#include "tmcore/riesz.hpp"
#include "tmcore/words.hpp"

namespace {

void BM_BirkhoffMidpointTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tmf::birkhoff_midpoint_table(n, 1));
    }
}
BENCHMARK(BM_BirkhoffMidpointTable)->Arg(14)->Arg(18);

void BM_PressureEval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto table = tmf::birkhoff_midpoint_table(n, 1);
    double t = 0.0;
    for (auto _ : state) {
        t += 0.25;
        if (t > 40.0) t = 0.0;
        benchmark::DoNotOptimize(tmf::pressure_approx(n, t, table, 1));
    }
}
BENCHMARK(BM_PressureEval)->Arg(16)->Arg(20);

void BM_FourierCoeffs(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tmf::fourier_coeffs(N));
    }
}
BENCHMARK(BM_FourierCoeffs)->Arg(12)->Arg(18);

void BM_CylinderMass(benchmark::State& state) {
    const auto poly = tmf::fourier_coeffs(static_cast<int>(state.range(0)));
    const auto word = tmf::BinaryWord::parse("01101001");
    for (auto _ : state) {
        benchmark::DoNotOptimize(tmf::cylinder_mass(word, poly, 1));
    }
}
BENCHMARK(BM_CylinderMass)->Arg(12)->Arg(16);

void BM_AdmissibleEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tmf::count_words(n, 3));
    }
}
BENCHMARK(BM_AdmissibleEnumeration)->Arg(12)->Arg(18);

void BM_RestrictedRepTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tmf::restricted_rep_table(3, n, 1));
    }
}
BENCHMARK(BM_RestrictedRepTable)->Arg(12)->Arg(16);

void BM_EtaTable(benchmark::State& state) {
    const std::size_t size = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        tmf::AutocorrelationTable table(size);
        benchmark::DoNotOptimize(table.eta(size - 1));
    }
}
BENCHMARK(BM_EtaTable)->Arg(1 << 12)->Arg(1 << 18);

void BM_EntropySeries(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(tmf::entropy_series(10));
    }
}
BENCHMARK(BM_EntropySeries);

}  // namespace

BENCHMARK_MAIN();
