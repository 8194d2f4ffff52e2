#include <benchmark/benchmark.h>

#include "dbb/centralized.hpp"
#include "dbb/dist_engine.hpp"
#include "dbb/experiment.hpp"
#include "dbb/objectives.hpp"
#include "dbb/presets.hpp"
#include "dbb/topology.hpp"

namespace {

void BM_JacobiEigenvalues(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const dbb::MixingMatrix W = dbb::sinkhorn_random_weights(dbb::make_graph(dbb::GraphKind::complete, n, 1), 1);
    for (auto _ : state) benchmark::DoNotOptimize(dbb::sym_eig_bounds(W.W));
}
BENCHMARK(BM_JacobiEigenvalues)->Arg(10)->Arg(30)->Arg(100);

void BM_CentralizedBB1(benchmark::State& state) {
    const auto net = dbb::random_network_objective(1, 10, 50.0, 3);
    const dbb::Vector x0 = dbb::initial_point(10, 3);
    dbb::StepRule rule;
    for (auto _ : state)
        benchmark::DoNotOptimize(dbb::solve_centralized(net.agent(0), x0, rule, 1e-10, 500));
}
BENCHMARK(BM_CentralizedBB1);

void BM_ConsensusRound(benchmark::State& state) {
    const dbb::ExperimentConfig cfg = dbb::fig2_config(dbb::StepVariant::bb1);
    const dbb::Instance inst = dbb::build_instance(cfg);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        state.PauseTiming();
        dbb::NetworkState s = dbb::init_network(inst.objective, inst.x0);
        state.ResumeTiming();
        dbb::consensus_round(s, inst.W, inst.objective, cfg.rule, threads);
        benchmark::DoNotOptimize(s.x_bar);
    }
}
BENCHMARK(BM_ConsensusRound)->Arg(1)->Arg(4);

void BM_Fig2Run(benchmark::State& state) {
    const dbb::ExperimentConfig cfg = dbb::fig2_config(dbb::StepVariant::bb1);
    for (auto _ : state) benchmark::DoNotOptimize(dbb::run_experiment(cfg));
}
BENCHMARK(BM_Fig2Run)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
