#include "fournet/sequence.hpp"

#include "fournet/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace fournet {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};

void check_probability(double v, std::string_view name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw ValidationError(fmt::format("{}={} outside [0, 1]", name, v));
}

} // namespace

bool is_terminal(const StepOutcome& outcome) noexcept {
    return !std::holds_alternative<PassCompleted>(outcome);
}

std::string_view to_string(const StepOutcome& outcome) {
    return std::visit(overloaded{
                          [](const PassCompleted&) { return std::string_view("pass_completed"); },
                          [](const PassIntercepted&) { return std::string_view("pass_intercepted"); },
                          [](const ShotTaken& s) {
                              return std::string_view(s.scored ? "shot_scored" : "shot_missed");
                          },
                          [](const ForcedLoss&) { return std::string_view("forced_loss"); },
                      },
                      outcome);
}

StepOutcome parse_outcome(std::string_view text) {
    if (text == "pass_completed")
        return PassCompleted{};
    if (text == "pass_intercepted")
        return PassIntercepted{};
    if (text == "shot_scored")
        return ShotTaken{true};
    if (text == "shot_missed")
        return ShotTaken{false};
    if (text == "forced_loss")
        return ForcedLoss{};
    throw ValidationError(fmt::format("unknown step outcome '{}'", text));
}

std::optional<std::string> find_sequence_violation(std::span<const PossessionStep> steps) {
    if (steps.empty())
        return "possession sequence has no steps";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& step = steps[i];
        const bool last = i + 1 == steps.size();
        if (is_shoot(step.decision)) {
            if (!std::holds_alternative<ShotTaken>(step.outcome))
                return fmt::format("step {}: shot decision with outcome {}", i, to_string(step.outcome));
        } else {
            const auto& pass = std::get<Pass>(step.decision);
            if (pass.target == step.network.holder())
                return fmt::format("step {}: pass target {} is the holder", i, pass.target.value());
            if (std::holds_alternative<ShotTaken>(step.outcome))
                return fmt::format("step {}: pass decision with outcome {}", i, to_string(step.outcome));
        }
        if (last) {
            if (!is_terminal(step.outcome))
                return fmt::format("step {}: final step must be terminal, got {}", i,
                                   to_string(step.outcome));
        } else {
            if (is_terminal(step.outcome))
                return fmt::format("step {}: non-final step has terminal outcome {}", i,
                                   to_string(step.outcome));
            const auto target = std::get<Pass>(step.decision).target;
            if (steps[i + 1].network.holder() != target)
                return fmt::format("step {}: pass to {} but next holder is {}", i, target.value(),
                                   steps[i + 1].network.holder().value());
        }
    }
    return std::nullopt;
}

PossessionSequence::PossessionSequence(std::vector<PossessionStep> steps) : steps_(std::move(steps)) {
    if (auto violation = find_sequence_violation(steps_))
        throw ValidationError(*violation);
}

double efficiency(const PossessionSequence& seq) {
    double best = 0.0;
    for (const auto& step : seq.steps())
        best = std::max(best, step.network.s());
    return best;
}

bool is_s_efficient(const PossessionSequence& seq, double s) {
    check_probability(s, "s");
    return efficiency(seq) >= s;
}

std::optional<double> attempted_pass_prob(const PossessionStep& step) {
    if (const auto* pass = std::get_if<Pass>(&step.decision))
        return step.network.edge(pass->target).p;
    return std::nullopt;
}

double security(const PossessionSequence& seq) {
    double worst = 1.0;
    for (const auto& step : seq.steps()) {
        if (auto p = attempted_pass_prob(step))
            worst = std::min(worst, *p);
    }
    return worst;
}

bool is_p_secure(const PossessionSequence& seq, double p) {
    check_probability(p, "p");
    return security(seq) >= p;
}

void RunningMetrics::observe(const PossessionStep& step) {
    efficiency_ = std::max(efficiency_, step.network.s());
    if (auto p = attempted_pass_prob(step))
        security_ = std::min(security_, *p);
    ++steps_;
}

std::vector<FrontierPoint> pareto_frontier(std::span<const ObjectivePoint> points) {
    if (points.empty())
        throw ValidationError("pareto frontier of an empty collection");

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::ranges::sort(order, [&](std::size_t a, std::size_t b) {
        const auto& pa = points[a];
        const auto& pb = points[b];
        if (pa.efficiency != pb.efficiency)
            return pa.efficiency > pb.efficiency;
        if (pa.security != pb.security)
            return pa.security > pb.security;
        return a < b;
    });

    // Sweep groups of equal efficiency. A point survives iff its security beats
    // every point with strictly higher efficiency and ties its own group's best.
    std::vector<FrontierPoint> front;
    bool have_prev = false;
    double best_prev_security = 0.0;
    for (std::size_t g = 0; g < order.size();) {
        const double eff = points[order[g]].efficiency;
        const double group_best = points[order[g]].security;
        std::size_t end = g;
        while (end < order.size() && points[order[end]].efficiency == eff)
            ++end;
        for (std::size_t k = g; k < end; ++k) {
            const auto& pt = points[order[k]];
            if (pt.security == group_best && (!have_prev || pt.security > best_prev_security))
                front.push_back({pt.efficiency, pt.security, order[k]});
        }
        if (!have_prev || group_best > best_prev_security)
            best_prev_security = group_best;
        have_prev = true;
        g = end;
    }
    return front;
}

std::vector<FrontierPoint> pareto_frontier(std::span<const PossessionSequence> seqs) {
    std::vector<ObjectivePoint> points;
    points.reserve(seqs.size());
    for (const auto& seq : seqs)
        points.push_back({efficiency(seq), security(seq)});
    return pareto_frontier(points);
}

double balance_score(const ObjectivePoint& point, double s_target, double p_target) {
    if (!(s_target > 0.0 && s_target <= 1.0))
        throw ValidationError(fmt::format("efficiency target {} outside (0, 1]", s_target));
    if (!(p_target > 0.0 && p_target <= 1.0))
        throw ValidationError(fmt::format("security target {} outside (0, 1]", p_target));
    return std::min(point.efficiency / s_target, point.security / p_target);
}

} // namespace fournet
