// Microbenchmarks for the hot paths: one derivative evaluation, a full
// integration, and a complete optimization on the n=50 networks.

#include <benchmark/benchmark.h>

#include "rcsim/dynamics.hpp"
#include "rcsim/graph.hpp"
#include "rcsim/objective.hpp"
#include "rcsim/optimizer.hpp"

namespace {

rcsim::RCInstance bench_instance(int n) {
    rcsim::RCInstance inst;
    inst.gR = rcsim::watts_strogatz(n, 4, 0.1, 1);
    inst.gT = rcsim::barabasi_albert(n, 2, 1);
    inst.beta1 = 0.4;
    inst.beta2 = 0.7;
    inst.delta = 0.5;
    inst.horizon = 30.0;
    inst.budget = 18.0;
    inst.c1 = 3.0;
    inst.c2 = 9.0;
    inst.init = rcsim::ExpectedState::uniform(n, 0.1, 0.1);
    return inst;
}

void BM_Derivative(benchmark::State& state) {
    const auto inst = bench_instance(static_cast<int>(state.range(0)));
    rcsim::URTUParams p{inst.beta1, inst.beta2, 1.0, 1.0, inst.delta};
    for (auto _ : state) {
        auto d = rcsim::derivative(inst.init, p, inst.gR, inst.gT);
        benchmark::DoNotOptimize(d.dAccU);
    }
}
BENCHMARK(BM_Derivative)->Arg(50)->Arg(200);

void BM_IntegrateFinal(benchmark::State& state) {
    const auto inst = bench_instance(50);
    rcsim::URTUParams p{inst.beta1, inst.beta2, 1.0, 1.0, inst.delta};
    for (auto _ : state) {
        auto fin = rcsim::integrate_final(inst.init, p, inst.gR, inst.gT, inst.horizon, 0.01);
        benchmark::DoNotOptimize(fin.accumU);
    }
}
BENCHMARK(BM_IntegrateFinal);

void BM_Effectiveness(benchmark::State& state) {
    const auto inst = bench_instance(50);
    const rcsim::Strategy s{1.0, rcsim::gamma2_of(inst, 1.0)};
    for (auto _ : state) {
        auto rep = rcsim::effectiveness(inst, s, 0.01);
        benchmark::DoNotOptimize(rep.eTotal);
    }
}
BENCHMARK(BM_Effectiveness);

void BM_SolveRC(benchmark::State& state) {
    const auto inst = bench_instance(50);
    rcsim::SolveSettings settings;
    settings.gridPoints = static_cast<int>(state.range(0));
    settings.dt = 0.01;
    for (auto _ : state) {
        auto res = rcsim::solve_rc(inst, settings);
        benchmark::DoNotOptimize(res.eTotal);
    }
}
BENCHMARK(BM_SolveRC)->Arg(21)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
