#include "fournet/decision.hpp"
#include "fournet/estimators.hpp"
#include "fournet/sequence.hpp"
#include "fournet/simulation.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace fournet;

double unit(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

MatchState sample_state(std::mt19937_64& rng) {
    Pitch pitch;
    TeamPositions team{};
    for (auto& t : team)
        t = {{unit(rng) * pitch.length, unit(rng) * pitch.width}, false};
    OpponentPositions opponents{};
    for (auto& o : opponents)
        o = {unit(rng) * pitch.length, unit(rng) * pitch.width};
    return MatchState(pitch, team, opponents, PlayerId(8));
}

DecisionNetwork sample_network(std::mt19937_64& rng) {
    std::map<PlayerId, PassOption> options;
    for (PlayerId j : all_players())
        if (j != PlayerId(8))
            options.emplace(j, PassOption{unit(rng), static_cast<int>(rng() % 11)});
    return build_network(PlayerId(8), unit(rng), 2.0, options);
}

void BM_Decide(benchmark::State& st) {
    std::mt19937_64 rng(1);
    const auto network = sample_network(rng);
    const DecisionPolicy policy(LinearStyle(3, 1), 0.9, TieBreak::LowestId);
    for (auto _ : st)
        benchmark::DoNotOptimize(decide(network, policy));
}
BENCHMARK(BM_Decide);

void BM_EstimateNetwork(benchmark::State& st) {
    std::mt19937_64 rng(2);
    const auto state = sample_state(rng);
    const auto est = default_estimators();
    for (auto _ : st)
        benchmark::DoNotOptimize(estimate_network(state, est));
}
BENCHMARK(BM_EstimateNetwork);

void BM_Rollout(benchmark::State& st) {
    std::mt19937_64 rng(3);
    const auto state = sample_state(rng);
    SimulationConfig cfg{DecisionPolicy(LinearStyle(3, 1), 0.5, TieBreak::LowestId), default_estimators()};
    for (auto _ : st) {
        cfg.seed = rng();
        benchmark::DoNotOptimize(rollout_possession(state, cfg));
    }
}
BENCHMARK(BM_Rollout);

void BM_ParetoFrontier(benchmark::State& st) {
    std::mt19937_64 rng(4);
    std::vector<ObjectivePoint> points(static_cast<std::size_t>(st.range(0)));
    for (auto& p : points)
        p = {unit(rng), unit(rng)};
    for (auto _ : st)
        benchmark::DoNotOptimize(pareto_frontier(std::span<const ObjectivePoint>(points)));
    st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_ParetoFrontier)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

} // namespace

BENCHMARK_MAIN();
