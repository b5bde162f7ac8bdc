#include <benchmark/benchmark.h>

#include "nuwigner/deformed.hpp"
#include "nuwigner/radical_sum.hpp"
#include "nuwigner/realizations.hpp"
#include "nuwigner/single_mode.hpp"
#include "nuwigner/spin_reps.hpp"
#include "nuwigner/two_mode.hpp"

using namespace nuwigner;

static void BM_RadicalProduct(benchmark::State& state) {
    const long n = state.range(0);
    const RadicalSum x = RadicalSum::sqrt(deformed_number(n) * deformed_number(n + 1));
    const RadicalSum y = RadicalSum::sqrt(deformed_number(n + 1) * deformed_number(n + 2));
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_RadicalProduct)->Arg(1)->Arg(8)->Arg(32);

static void BM_SpinCommutator(benchmark::State& state) {
    const SuNu2Rep rep = build_js_spin_rep(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(commutator(rep.j_plus, rep.j_minus));
}
BENCHMARK(BM_SpinCommutator)->DenseRange(2, 8, 2);

static void BM_SuNu2Audit(benchmark::State& state) {
    const SuNu2Rep rep = build_js_spin_rep(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(audit_su_nu2(rep));
}
BENCHMARK(BM_SuNu2Audit)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SingleModeAudit(benchmark::State& state) {
    const SingleModeSet s = build_single_mode(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(audit_single_mode(s));
}
BENCHMARK(BM_SingleModeAudit)->Arg(5)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_TwoModeAudit(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const TwoModeSet s = build_two_mode(d, d);
    for (auto _ : state) benchmark::DoNotOptimize(audit_two_mode(s));
}
BENCHMARK(BM_TwoModeAudit)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Realizations(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(audit_realizations(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Realizations)->Arg(6)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
