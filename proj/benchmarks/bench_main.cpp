#include <benchmark/benchmark.h>

#include "opam/coevolution.hpp"
#include "opam/fitness.hpp"
#include "opam/scheduler.hpp"
#include "opam/synth.hpp"

using namespace opam;

namespace {

TaskSet make_subject(int n, std::uint64_t seed = 7) {
    SynthConfig cfg;
    cfg.n = n;
    cfg.target_utilization = 0.7;
    cfg.pd_min = 10;
    cfg.pd_max = 100;
    cfg.granularity = 10;
    cfg.aperiodic_ratio = 0.4;
    cfg.seed = seed;
    return synthesize(cfg).taskset;
}

void BM_Simulate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Tick horizon = state.range(1);
    const TaskSet ts = make_subject(n);
    Rng rng(1);
    const auto seq = random_arrival_sequence(ts, horizon, rng);
    const auto pa = random_priority_assignment(ts.size(), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate(ts, seq, pa, horizon));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Simulate)
    ->Args({10, 2000})
    ->Args({20, 2000})
    ->Args({40, 2000})
    ->Args({10, 10000})
    ->Args({10, 50000});

void BM_FitnessGrid(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    const TaskSet ts = make_subject(20);
    const Tick horizon = 2000;
    const Evaluator eval(ts, horizon, jobs);
    Rng rng(2);
    std::vector<ArrivalSequence> as;
    std::vector<PriorityAssignment> ps;
    for (int i = 0; i < 10; ++i) {
        as.push_back(random_arrival_sequence(ts, horizon, rng));
        ps.push_back(random_priority_assignment(ts.size(), rng));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(eval.internal_fd_all(as, ps));
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_FitnessGrid)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_CoevolutionCycle(benchmark::State& state) {
    const TaskSet ts = make_subject(static_cast<int>(state.range(0)));
    CoevolutionConfig cfg;
    cfg.cycles = 1;
    cfg.horizon = 2000;
    cfg.seed = 3;
    cfg.jobs = 4;
    for (auto _ : state)
        benchmark::DoNotOptimize(coevolve(ts, cfg));
}
BENCHMARK(BM_CoevolutionCycle)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
