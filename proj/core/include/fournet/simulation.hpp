#pragma once

#include "fournet/decision.hpp"
#include "fournet/estimators.hpp"
#include "fournet/match_state.hpp"
#include "fournet/sequence.hpp"
#include "fournet/style.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fournet {

// After a completed pass every non-receiving player drifts `drift` meters:
// attackers toward the goal centre, defenders toward the new ball position.
// Nobody overshoots the point they drift toward; positions stay on the pitch.
struct MovementModel {
    double drift = 2.0;

    friend bool operator==(const MovementModel&, const MovementModel&) = default;
};

struct SimulationConfig {
    DecisionPolicy policy;
    EstimatorSuite estimators;
    int max_steps = 30;
    std::uint64_t seed = 0;
    MovementModel movement{};
    // Worker threads for multi-trial runs; 0 means hardware concurrency.
    unsigned threads = 1;
};

MatchState advance_after_pass(const MatchState& state, PlayerId receiver, const MovementModel& movement);

struct Rollout {
    PossessionSequence sequence;
    RunningMetrics metrics; // maintained while stepping, never recomputed
};

// One stochastic possession from `state`, driven by a generator seeded with
// cfg.seed. A shot scores with probability s; a pass completes with
// probability p; a degenerate pass, or a pass on the max_steps-th step,
// ends in ForcedLoss.
Rollout rollout_possession(const MatchState& state, const SimulationConfig& cfg);
PossessionSequence simulate_possession(const MatchState& state, const SimulationConfig& cfg);

// Trials 0..trials-1 with seeds derive_seed(cfg.seed, stream, i), spread over
// cfg.threads workers. Result order is trial order regardless of threading.
std::vector<Rollout> run_trials(const MatchState& state, const SimulationConfig& cfg, std::uint64_t stream,
                                std::size_t trials);

struct TrialSummary {
    std::size_t trials = 0;
    double mean_efficiency = 0.0;
    double mean_security = 0.0;
    double goal_rate = 0.0;
    double mean_length = 0.0;
};

// Aggregates in index order.
TrialSummary summarize(std::span<const Rollout> rollouts);

struct StyleReport {
    LinearStyle style;
    TrialSummary summary;
};

// Runs `trials` possessions per style. Style k uses seed stream k, so a
// style's report depends only on its position in the list, the base seed and
// the trial count. The base policy's threshold and tie-break are kept.
std::vector<StyleReport> monte_carlo_compare(const MatchState& state, std::span<const LinearStyle> styles,
                                             std::size_t trials, const SimulationConfig& base);

} // namespace fournet
