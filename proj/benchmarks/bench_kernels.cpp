#include <benchmark/benchmark.h>

#include "supalg/borel.hpp"
#include "supalg/periplectic.hpp"
#include "supalg/schur.hpp"
#include "supalg/tca.hpp"

using namespace supalg;

static void BM_LrRectangle(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Partition box = rectangle(n, n);
    Partition lam = rectangle(n / 2 + 1, n / 2);
    Partition mu = *complement_in_rect(lam, n, n);
    for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(lam, mu, box));
}
BENCHMARK(BM_LrRectangle)->Arg(3)->Arg(4);

static void BM_WedgeOfSym2(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wedge_of_sym2(d, 4));
}
BENCHMARK(BM_WedgeOfSym2)->Arg(3)->Arg(5);

static void BM_SuperMul(benchmark::State& state) {
    RankContext ctx = RankContext::make(static_cast<int>(state.range(0)));
    SuperPoly a = x_lambda(ctx, Partition({1, 1}));
    SuperPoly b = y_product(ctx);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_SuperMul)->Arg(2)->Arg(3);

static void BM_GradedBasis(benchmark::State& state) {
    RankContext ctx = RankContext::make(2);
    BasisQuery q;
    q.central_degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(graded_basis(ctx.table, q));
}
BENCHMARK(BM_GradedBasis)->Arg(6)->Arg(10);

static void BM_BrauerCompose(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    auto fs = enumerate_homs(p, p - 2);
    auto gs = enumerate_homs(p - 2, p - 4);
    size_t i = 0;
    for (auto _ : state) {
        const auto& f = fs[i % fs.size()];
        const auto& g = gs[(i * 7) % gs.size()];
        benchmark::DoNotOptimize(compose(g, f));
        ++i;
    }
}
BENCHMARK(BM_BrauerCompose)->Arg(6);

static void BM_InjectivityScan(benchmark::State& state) {
    BbarContext ctx = BbarContext::make(2);
    for (auto _ : state) benchmark::DoNotOptimize(injectivity_scan(ctx, 3));
}
BENCHMARK(BM_InjectivityScan);

BENCHMARK_MAIN();
