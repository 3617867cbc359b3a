#include <benchmark/benchmark.h>

#include "cyclic6j/charged.hpp"
#include "cyclic6j/sampling.hpp"

using namespace cyclic6j;

namespace {

FusedTriple triple(const Context& ctx) {
    Rng rng(5);
    for (;;) {
        StandardRep r = random_rep(rng), m = random_rep(rng), n = random_rep(rng);
        if (auto t = try_fuse_triple_admissible(ctx, r, m, n)) return *t;
    }
}

PentagonAssignment assignment(const Context& ctx) {
    Rng rng(6);
    for (;;) {
        StandardRep r = random_rep(rng), m = random_rep(rng), n = random_rep(rng), v = random_rep(rng);
        if (auto pa = find_pentagon_assignment(ctx, r, m, n, v)) return *pa;
    }
}

void BM_sixj(benchmark::State& state) {
    Context ctx = make_context(static_cast<int>(state.range(0)));
    FusedTriple t = triple(ctx);
    for (auto _ : state) benchmark::DoNotOptimize(sixj(ctx, t));
}

void BM_charged_sixj(benchmark::State& state) {
    Context ctx = make_context(static_cast<int>(state.range(0)));
    SixJTensor base = sixj(ctx, triple(ctx));
    for (auto _ : state) benchmark::DoNotOptimize(c_sixj(ctx, base, {1, 2}));
}

void BM_pentagon_residual(benchmark::State& state) {
    Context ctx = make_context(static_cast<int>(state.range(0)));
    PentagonAssignment pa = assignment(ctx);
    for (auto _ : state) benchmark::DoNotOptimize(pentagon_residual(ctx, pa));
}

}  // namespace

BENCHMARK(BM_sixj)->Arg(3)->Arg(5)->Arg(7)->Arg(9);
BENCHMARK(BM_charged_sixj)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(BM_pentagon_residual)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
