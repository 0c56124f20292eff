#pragma once

#include "fournet/match_state.hpp"
#include "fournet/network.hpp"

#include <functional>

namespace fournet {

// Constants of the default geometric models. Distances in meters, times in
// seconds.
struct EstimatorConstants {
    double goal_width = 7.32;
    double score_decay = 20.0;      // e-folding distance of scoring probability
    double pressure_speed = 5.0;    // opponent closing speed, m/s
    double max_decision_time = 4.0;
    double pass_decay = 30.0;       // e-folding distance of pass completion
    double pass_time_scale = 1.0;   // time constant of 1 - exp(-tau / scale)
    double lane_half_width = 2.0;   // logistic scale of lane openness
    double openness_radius = 10.0;  // receiver counts as fully open beyond this
    double risk_score_weight = 0.7;
    double risk_openness_weight = 0.3;

    friend bool operator==(const EstimatorConstants&, const EstimatorConstants&) = default;
};

// Throws ValidationError naming the first constant out of its domain.
void validate(const EstimatorConstants& c);

struct EstimatorSuite {
    std::function<double(const MatchState&)> score_prob;
    std::function<double(const MatchState&)> decision_time;
    std::function<double(const MatchState&, PlayerId target, double tau)> pass_prob;
    std::function<int(const MatchState&, PlayerId target)> risk;
};

// exp(-d_goal / decay) * max(0, cos theta), where theta is the angle between
// the attack direction and the closest ray from `position` that reaches the
// goal mouth (0 when the player stands laterally between the posts).
double score_prob_at(const Pitch& pitch, Vec2 position, const EstimatorConstants& c = {});

double default_score_prob(const MatchState& state, const EstimatorConstants& c = {});
double default_decision_time(const MatchState& state, const EstimatorConstants& c = {});

// Lane openness: min over opponents of logistic(d_perp / lane_half_width),
// d_perp being the opponent's distance to the pass segment.
double lane_openness(const MatchState& state, Vec2 from, Vec2 to, const EstimatorConstants& c = {});

double default_pass_prob(const MatchState& state, PlayerId target, double tau,
                         const EstimatorConstants& c = {});
int default_risk(const MatchState& state, PlayerId target, const EstimatorConstants& c = {});

EstimatorSuite default_estimators(const EstimatorConstants& c = {});

// Builds the holder's 4-network. Unavailable teammates (offside, outside) get
// p = r = 0 without consulting the estimators. Estimator outputs outside the
// edge-vector bounds raise ValidationError naming the estimator.
DecisionNetwork estimate_network(const MatchState& state, const EstimatorSuite& est);

} // namespace fournet
