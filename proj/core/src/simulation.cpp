#include "fournet/simulation.hpp"

#include "fournet/error.hpp"
#include "fournet/seeding.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <exception>
#include <optional>
#include <thread>

namespace fournet {

namespace {

Vec2 drift_toward(Vec2 from, Vec2 to, double step) {
    const double d = distance(from, to);
    if (d <= step || d == 0.0)
        return to;
    const double t = step / d;
    return {from.x + t * (to.x - from.x), from.y + t * (to.y - from.y)};
}

void check_config(const SimulationConfig& cfg) {
    if (cfg.max_steps < 1)
        throw ValidationError(fmt::format("max_steps={} must be at least 1", cfg.max_steps));
    if (!(cfg.movement.drift >= 0.0))
        throw ValidationError(fmt::format("movement drift={} must be nonnegative", cfg.movement.drift));
    if (!cfg.estimators.score_prob || !cfg.estimators.decision_time || !cfg.estimators.pass_prob ||
        !cfg.estimators.risk)
        throw ValidationError("estimator suite is incomplete");
}

unsigned worker_count(unsigned requested, std::size_t trials) {
    unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(trials, 1)));
}

} // namespace

MatchState advance_after_pass(const MatchState& state, PlayerId receiver, const MovementModel& movement) {
    const Pitch& pitch = state.pitch();
    const Vec2 goal = pitch.goal_center();
    const Vec2 ball = state.teammate(receiver).position;

    TeamPositions team = state.team();
    for (PlayerId id : all_players()) {
        auto& mate = team[id.slot()];
        if (id == receiver || mate.outside)
            continue;
        mate.position = pitch.clamp(drift_toward(mate.position, goal, movement.drift));
    }
    OpponentPositions opponents = state.opponents();
    for (auto& opp : opponents)
        opp = pitch.clamp(drift_toward(opp, ball, movement.drift));
    return MatchState(pitch, team, opponents, receiver);
}

Rollout rollout_possession(const MatchState& initial, const SimulationConfig& cfg) {
    check_config(cfg);
    UniformSource rng(cfg.seed);
    RunningMetrics metrics;
    std::vector<PossessionStep> steps;
    MatchState state = initial;

    for (int step = 1;; ++step) {
        DecisionNetwork network = estimate_network(state, cfg.estimators);
        Decision decision = decide(network, cfg.policy);
        std::optional<PlayerId> receiver;
        StepOutcome outcome = ForcedLoss{};

        if (is_shoot(decision)) {
            outcome = ShotTaken{rng.bernoulli(network.s())};
        } else {
            const auto& pass = std::get<Pass>(decision);
            if (!pass.degenerate && step < cfg.max_steps) {
                if (rng.bernoulli(network.edge(pass.target).p)) {
                    outcome = PassCompleted{};
                    receiver = pass.target;
                } else {
                    outcome = PassIntercepted{};
                }
            }
        }

        steps.push_back(PossessionStep{std::move(network), decision, outcome});
        metrics.observe(steps.back());
        if (!receiver)
            break;
        state = advance_after_pass(state, *receiver, cfg.movement);
    }
    return Rollout{PossessionSequence(std::move(steps)), metrics};
}

PossessionSequence simulate_possession(const MatchState& state, const SimulationConfig& cfg) {
    return rollout_possession(state, cfg).sequence;
}

std::vector<Rollout> run_trials(const MatchState& state, const SimulationConfig& cfg, std::uint64_t stream,
                                std::size_t trials) {
    check_config(cfg);
    std::vector<std::optional<Rollout>> slots(trials);
    const unsigned workers = worker_count(cfg.threads, trials);
    std::vector<std::exception_ptr> errors(workers);

    auto work = [&](unsigned w) {
        try {
            SimulationConfig local = cfg;
            for (std::size_t i = w; i < trials; i += workers) {
                local.seed = derive_seed(cfg.seed, stream, i);
                slots[i].emplace(rollout_possession(state, local));
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
    }
    for (auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }

    std::vector<Rollout> out;
    out.reserve(trials);
    for (auto& slot : slots)
        out.push_back(std::move(*slot));
    return out;
}

TrialSummary summarize(std::span<const Rollout> rollouts) {
    TrialSummary summary;
    summary.trials = rollouts.size();
    if (rollouts.empty())
        return summary;
    double eff = 0.0, sec = 0.0, goals = 0.0, length = 0.0;
    for (const auto& r : rollouts) {
        eff += r.metrics.efficiency();
        sec += r.metrics.security();
        length += static_cast<double>(r.sequence.size());
        if (const auto* shot = std::get_if<ShotTaken>(&r.sequence.final_step().outcome); shot && shot->scored)
            goals += 1.0;
    }
    const double n = static_cast<double>(rollouts.size());
    summary.mean_efficiency = eff / n;
    summary.mean_security = sec / n;
    summary.goal_rate = goals / n;
    summary.mean_length = length / n;
    return summary;
}

std::vector<StyleReport> monte_carlo_compare(const MatchState& state, std::span<const LinearStyle> styles,
                                             std::size_t trials, const SimulationConfig& base) {
    if (styles.empty())
        throw ValidationError("style list is empty");
    if (trials == 0)
        throw ValidationError("trials must be at least 1");

    std::vector<StyleReport> reports;
    reports.reserve(styles.size());
    for (std::size_t k = 0; k < styles.size(); ++k) {
        SimulationConfig cfg = base;
        cfg.policy = DecisionPolicy(styles[k], base.policy.threshold(), base.policy.tie_break());
        auto rollouts = run_trials(state, cfg, k, trials);
        reports.push_back({styles[k], summarize(rollouts)});
    }
    return reports;
}

} // namespace fournet
