#include "fournet/estimators.hpp"

#include "fournet/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>

namespace fournet {

namespace {

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw ValidationError(fmt::format("estimator constant {}={} must be positive", name, v));
}

void require_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw ValidationError(fmt::format("estimator constant {}={} outside [0, 1]", name, v));
}

void require_not_holder(const MatchState& state, PlayerId target) {
    if (target == state.holder())
        throw ValidationError(fmt::format("target {} is the ball holder", target.value()));
}

} // namespace

void validate(const EstimatorConstants& c) {
    require_positive(c.goal_width, "goal_width");
    require_positive(c.score_decay, "score_decay");
    require_positive(c.pressure_speed, "pressure_speed");
    if (!(c.max_decision_time >= 0.0) || !std::isfinite(c.max_decision_time))
        throw ValidationError(
            fmt::format("estimator constant max_decision_time={} must be nonnegative", c.max_decision_time));
    require_positive(c.pass_decay, "pass_decay");
    require_positive(c.pass_time_scale, "pass_time_scale");
    require_positive(c.lane_half_width, "lane_half_width");
    require_positive(c.openness_radius, "openness_radius");
    require_unit(c.risk_score_weight, "risk_score_weight");
    require_unit(c.risk_openness_weight, "risk_openness_weight");
}

double score_prob_at(const Pitch& pitch, Vec2 position, const EstimatorConstants& c) {
    const Vec2 goal = pitch.goal_center();
    const double d_goal = distance(position, goal);
    const double depth = goal.x - position.x;
    const double lateral = std::max(0.0, std::abs(position.y - goal.y) - c.goal_width / 2.0);
    const double ray = std::hypot(depth, lateral);
    const double cos_theta = ray == 0.0 ? 1.0 : depth / ray;
    const double s = std::exp(-d_goal / c.score_decay) * std::max(0.0, cos_theta);
    return std::clamp(s, 0.0, 1.0);
}

double default_score_prob(const MatchState& state, const EstimatorConstants& c) {
    return score_prob_at(state.pitch(), state.ball(), c);
}

double default_decision_time(const MatchState& state, const EstimatorConstants& c) {
    const double d = nearest_opponent_distance(state, state.ball());
    return std::min(d / c.pressure_speed, c.max_decision_time);
}

double lane_openness(const MatchState& state, Vec2 from, Vec2 to, const EstimatorConstants& c) {
    double openness = 1.0;
    for (const auto& opp : state.opponents())
        openness = std::min(openness, logistic(distance_to_segment(opp, from, to) / c.lane_half_width));
    return openness;
}

double default_pass_prob(const MatchState& state, PlayerId target, double tau, const EstimatorConstants& c) {
    require_not_holder(state, target);
    const Vec2 from = state.ball();
    const Vec2 to = state.teammate(target).position;
    const double reach = std::exp(-distance(from, to) / c.pass_decay);
    const double time_factor = 1.0 - std::exp(-tau / c.pass_time_scale);
    return std::clamp(reach * lane_openness(state, from, to, c) * time_factor, 0.0, 1.0);
}

int default_risk(const MatchState& state, PlayerId target, const EstimatorConstants& c) {
    require_not_holder(state, target);
    const Vec2 pos = state.teammate(target).position;
    const double threat = score_prob_at(state.pitch(), pos, c);
    const double openness = std::min(1.0, nearest_opponent_distance(state, pos) / c.openness_radius);
    const double mix = std::clamp(c.risk_score_weight * threat + c.risk_openness_weight * openness, 0.0, 1.0);
    return static_cast<int>(std::lround(kMaxRisk * mix));
}

EstimatorSuite default_estimators(const EstimatorConstants& c) {
    validate(c);
    return EstimatorSuite{
        [c](const MatchState& s) { return default_score_prob(s, c); },
        [c](const MatchState& s) { return default_decision_time(s, c); },
        [c](const MatchState& s, PlayerId j, double tau) { return default_pass_prob(s, j, tau, c); },
        [c](const MatchState& s, PlayerId j) { return default_risk(s, j, c); },
    };
}

DecisionNetwork estimate_network(const MatchState& state, const EstimatorSuite& est) {
    const double s = est.score_prob(state);
    if (!(s >= 0.0 && s <= 1.0))
        throw ValidationError(fmt::format("estimator score_prob returned {} outside [0, 1]", s));
    const double tau = est.decision_time(state);
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw ValidationError(fmt::format("estimator decision_time returned {}; expected finite >= 0", tau));

    std::map<PlayerId, PassOption> options;
    std::vector<PlayerId> unavailable;
    for (PlayerId j : all_players()) {
        if (j == state.holder())
            continue;
        if (!is_available(state, j)) {
            options.emplace(j, PassOption{});
            unavailable.push_back(j);
            continue;
        }
        const double p = est.pass_prob(state, j, tau);
        if (!(p >= 0.0 && p <= 1.0))
            throw ValidationError(
                fmt::format("estimator pass_prob returned {} for teammate {}; expected [0, 1]", p, j.value()));
        const int r = est.risk(state, j);
        if (r < 0 || r > kMaxRisk)
            throw ValidationError(
                fmt::format("estimator risk returned {} for teammate {}; expected 0..{}", r, j.value(), kMaxRisk));
        options.emplace(j, PassOption{p, r});
    }

    auto network = build_network(state.holder(), s, tau, options);
    for (PlayerId j : unavailable)
        network = mark_unavailable(network, j);
    return network;
}

} // namespace fournet
