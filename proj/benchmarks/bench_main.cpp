#include "monoconv/bounds.hpp"
#include "monoconv/envelopes.hpp"
#include "monoconv/hulls.hpp"
#include "monoconv/lp.hpp"
#include "monoconv/oracle.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace monoconv;

static void BM_RatioConstants(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ratio_box_constants(n, 2.0));
    state.SetComplexityN(n);
}
BENCHMARK(BM_RatioConstants)->RangeMultiplier(4)->Range(4, 4096)->Complexity();

static void BM_DBoundCases(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(d_bound_cases(static_cast<int>(state.range(0)), 3.0));
}
BENCHMARK(BM_DBoundCases)->Arg(10)->Arg(100);

static Point random_sym_point(int n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Point x(static_cast<std::size_t>(n));
    for (auto& v : x)
        v = u(rng);
    return x;
}

static void BM_SymEnvelopeEnumerated(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Point x = random_sym_point(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(envelopes_symbox_enumerated(n, x));
}
BENCHMARK(BM_SymEnvelopeEnumerated)->DenseRange(4, 16, 4);

static void BM_SymEnvelopeClosedForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Point x = random_sym_point(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(envelopes_symbox_closed_form(n, x));
}
BENCHMARK(BM_SymEnvelopeClosedForm)->DenseRange(4, 16, 4)->Arg(1000);

static void BM_FacetLp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FacetSystem fs = build_symbox_hull(n);
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    Point c(static_cast<std::size_t>(n + 1));
    for (auto& v : c)
        v = g(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(lp_optimum(fs, c));
}
BENCHMARK(BM_FacetLp)->DenseRange(2, 6);

static void BM_ConstructiveOptimum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Point c = random_sym_point(n + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(constructive_optimum(c));
}
BENCHMARK(BM_ConstructiveOptimum)->Arg(6)->Arg(1000);

static void BM_OracleUnitBoxConcave(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Monomial m = Monomial::multilinear(n);
    const Domain dom = Domain::unit_box(n);
    GridSpec spec;
    spec.threads = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            max_gap(m, dom, Estimator::of(EstimatorKind::min_coordinate), Side::over, c1(n), spec));
}
BENCHMARK(BM_OracleUnitBoxConcave)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
