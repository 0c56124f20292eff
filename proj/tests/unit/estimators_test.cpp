#include "fournet/error.hpp"
#include "fournet/estimators.hpp"
#include "fournet/serialization.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

namespace fournet {
namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

MatchState load_state(const std::string& name) {
    return parse_match_state(slurp(std::string(FOURNET_SOURCE_DIR) + "/data/" + name));
}

// Opponents parked in a far corner unless overridden.
MatchState make_state(Vec2 holder_pos, Vec2 target_pos, std::vector<Vec2> opps = {}) {
    TeamPositions team{};
    for (auto& t : team)
        t = {{5.0, 5.0}, false};
    team[PlayerId(1).slot()] = {holder_pos, false};
    team[PlayerId(2).slot()] = {target_pos, false};
    OpponentPositions opponents{};
    for (std::size_t k = 0; k < opponents.size(); ++k)
        opponents[k] = k < opps.size() ? opps[k] : Vec2{104.0, 67.0};
    return MatchState(Pitch{}, team, opponents, PlayerId(1));
}

std::vector<Vec2> corner_opponents() {
    std::vector<Vec2> opps;
    for (int k = 0; k < kTeamSize; ++k)
        opps.push_back({0.0, static_cast<double>(k)});
    return opps;
}

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

class GoldenNetwork : public ::testing::TestWithParam<std::string> {};

TEST_P(GoldenNetwork, MatchesIndependentReimplementation) {
    const auto state = load_state(GetParam() + ".json");
    const auto golden = parse_json(slurp(std::string(FOURNET_SOURCE_DIR) + "/tests/golden/" + GetParam() + "_network.json"));
    const auto network = estimate_network(state, default_estimators());
    ASSERT_EQ(network.holder().value(), golden["holder"].get<int>());
    EXPECT_NEAR(network.s(), golden["s"].get<double>(), 1e-12);
    EXPECT_NEAR(network.tau(), golden["tau"].get<double>(), 1e-12);
    for (const auto& e : golden["edges"]) {
        const auto& v = network.edge(PlayerId(e["to"].get<int>()));
        EXPECT_NEAR(v.p, e["p"].get<double>(), 1e-12) << "edge to " << e["to"];
        EXPECT_EQ(v.r, e["r"].get<int>()) << "edge to " << e["to"];
    }
}

INSTANTIATE_TEST_SUITE_P(ShippedStates, GoldenNetwork, ::testing::Values("test_state", "midfield_state"));

TEST(EstimateNetwork, OffsideTeammateZeroed) {
    const auto state = load_state("test_state.json");
    ASSERT_TRUE(is_offside(state, PlayerId(9)));
    const auto n = estimate_network(state, default_estimators());
    EXPECT_EQ(n.edge(PlayerId(9)).p, 0.0);
    EXPECT_EQ(n.edge(PlayerId(9)).r, 0);
    EXPECT_GT(n.edge(PlayerId(10)).p, 0.0);
}

TEST(EstimateNetwork, OutsideTeammateZeroed) {
    auto state = make_state({50, 34}, {60, 30});
    TeamPositions team = state.team();
    team[PlayerId(3).slot()] = {{40.0, -1.0}, true};
    const MatchState with_outside(state.pitch(), team, state.opponents(), PlayerId(1));
    const auto n = estimate_network(with_outside, default_estimators());
    EXPECT_EQ(n.edge(PlayerId(3)), (EdgeVector4{n.s(), n.tau(), 0.0, 0}));
}

TEST(EstimateNetwork, GoalMouthBeatsMidfield) {
    const auto near_goal = make_state({103.0, 34.0}, {60, 30});
    const auto midfield = make_state({52.5, 34.0}, {60, 30});
    EXPECT_GT(estimate_network(near_goal, default_estimators()).s(),
              estimate_network(midfield, default_estimators()).s());
}

TEST(EstimateNetwork, OutOfBoundsEstimatorNamed) {
    auto est = default_estimators();
    const auto state = make_state({50, 34}, {60, 30});
    auto expect_named = [&](const EstimatorSuite& suite, const std::string& name) {
        try {
            estimate_network(state, suite);
            FAIL() << name;
        } catch (const ValidationError& e) {
            EXPECT_NE(std::string(e.what()).find(name), std::string::npos) << e.what();
        }
    };
    auto bad = est;
    bad.score_prob = [](const MatchState&) { return 1.2; };
    expect_named(bad, "score_prob");
    bad = est;
    bad.decision_time = [](const MatchState&) { return -1.0; };
    expect_named(bad, "decision_time");
    bad = est;
    bad.pass_prob = [](const MatchState&, PlayerId, double) { return std::nan(""); };
    expect_named(bad, "pass_prob");
    bad = est;
    bad.risk = [](const MatchState&, PlayerId) { return 11; };
    expect_named(bad, "risk");
}

TEST(ScoreProb, Examples) {
    const Pitch pitch;
    EXPECT_EQ(score_prob_at(pitch, pitch.goal_center()), 1.0);
    EXPECT_LT(default_score_prob(make_state({52.5, 34.0}, {60, 30})), 0.1);
    // wide on the goal line sees no goal mouth
    EXPECT_EQ(score_prob_at(pitch, {105.0, 5.0}), 0.0);
}

TEST(ScoreProb, DecreasesAlongRaysFromGoal) {
    const Pitch pitch;
    testing::Rng rng(29);
    for (int k = 0; k < 2000; ++k) {
        const double angle = testing::uniform(rng, -1.5, 1.5);
        const double d1 = testing::uniform(rng, 0.5, 40.0);
        const double d2 = d1 + testing::uniform(rng, 0.1, 20.0);
        const Vec2 a{pitch.length - d1 * std::cos(angle), 34.0 + d1 * std::sin(angle)};
        const Vec2 b{pitch.length - d2 * std::cos(angle), 34.0 + d2 * std::sin(angle)};
        if (!pitch.contains(a) || !pitch.contains(b))
            continue;
        ASSERT_LE(score_prob_at(pitch, b), score_prob_at(pitch, a));
        if (score_prob_at(pitch, a) > 0.0)
            ASSERT_LT(score_prob_at(pitch, b), score_prob_at(pitch, a));
    }
}

TEST(DecisionTime, Examples) {
    EXPECT_EQ(default_decision_time(make_state({50, 34}, {60, 30}, {{50, 34}})), 0.0);
    EXPECT_EQ(default_decision_time(make_state({50, 34}, {60, 30}, {{70, 34}})), 4.0);
    EXPECT_EQ(default_decision_time(make_state({50, 34}, {60, 30}, {{80, 34}})), 4.0);
    EXPECT_DOUBLE_EQ(default_decision_time(make_state({50, 34}, {60, 30}, {{60, 34}})), 2.0);
}

TEST(PassProb, NoTimeNoPass) {
    const auto state = make_state({50, 34}, {60, 30});
    for (PlayerId j : all_players())
        if (j != state.holder())
            EXPECT_EQ(default_pass_prob(state, j, 0.0), 0.0);
    EXPECT_THROW(default_pass_prob(state, PlayerId(1), 1.0), ValidationError);
}

TEST(PassProb, OpenShortPassApproachesTimeCap) {
    // nearest opponent to the lane is exactly 10 m away
    const auto state = make_state({50, 34}, {50.001, 34}, {{50, 24}, {40, 60}, {90, 10}});
    const double p = default_pass_prob(state, PlayerId(2), 4.0);
    const double expected = std::exp(-0.001 / 30.0) * logistic(5.0) * (1.0 - std::exp(-4.0));
    EXPECT_NEAR(p, expected, 1e-12);
    EXPECT_NEAR(p, 0.9817, 0.01);
    EXPECT_LT(p, 1.0 - std::exp(-4.0));
}

TEST(PassProb, OpponentOnLaneHalvesIt) {
    const auto open = make_state({30, 34}, {50, 34}, {{100, 5}});
    const auto blocked = make_state({30, 34}, {50, 34}, {{100, 5}, {40, 34}});
    const double before = default_pass_prob(open, PlayerId(2), 3.0);
    const double after = default_pass_prob(blocked, PlayerId(2), 3.0);
    EXPECT_NEAR(after / before, 0.5, 1e-9);
}

TEST(Risk, Examples) {
    const Pitch pitch;
    EXPECT_EQ(default_risk(make_state({80, 34}, pitch.goal_center(), {{60, 10}}), PlayerId(2)), 10);
    // tightly marked at the edge of the own box
    const auto own_box = make_state({50, 34}, {12, 30}, {{12.5, 30}});
    const int r = default_risk(own_box, PlayerId(2));
    EXPECT_GE(r, 0);
    EXPECT_LE(r, 1);
    EXPECT_THROW(default_risk(own_box, PlayerId(1)), ValidationError);
}

TEST(Risk, FartherFromGoalNeverRaisesRisk) {
    // bearing from the goal centre fixed, only the distance grows
    const Pitch pitch;
    testing::Rng rng(31);
    for (int k = 0; k < 2000; ++k) {
        const double angle = testing::uniform(rng, -1.5, 1.5);
        const double d1 = testing::uniform(rng, 0.0, 40.0);
        const double d2 = d1 + testing::uniform(rng, 0.0, 30.0);
        const Vec2 a{pitch.length - d1 * std::cos(angle), 34.0 + d1 * std::sin(angle)};
        const Vec2 b{pitch.length - d2 * std::cos(angle), 34.0 + d2 * std::sin(angle)};
        if (!pitch.contains(a) || !pitch.contains(b))
            continue;
        // opponents far away so openness saturates in both positions
        const auto near_goal = make_state({20, 34}, a, corner_opponents());
        const auto far_goal = make_state({20, 34}, b, corner_opponents());
        ASSERT_LE(default_risk(far_goal, PlayerId(2)), default_risk(near_goal, PlayerId(2)));
    }
}

TEST(EstimatorFuzz, BoundsAndMonotonicity) {
    testing::Rng rng(37);
    const EstimatorConstants c;
    for (int k = 0; k < 10000; ++k) {
        const auto state = testing::random_state(rng);
        const double s = default_score_prob(state);
        const double tau = default_decision_time(state);
        ASSERT_GE(s, 0.0);
        ASSERT_LE(s, 1.0);
        ASSERT_GE(tau, 0.0);
        ASSERT_LE(tau, c.max_decision_time);
        for (PlayerId j : all_players()) {
            if (j == state.holder() || state.teammate(j).outside)
                continue;
            const double p = default_pass_prob(state, j, tau);
            const int r = default_risk(state, j);
            ASSERT_GE(p, 0.0);
            ASSERT_LE(p, 1.0);
            ASSERT_GE(r, 0);
            ASSERT_LE(r, 10);
            ASSERT_LE(default_pass_prob(state, j, tau * 0.5), p);
        }
        ASSERT_NO_THROW(estimate_network(state, default_estimators()));

        // extend one pass along its own ray: longer and never more open
        const PlayerId j = testing::random_teammate(rng, state.holder());
        if (state.teammate(j).outside)
            continue;
        const Vec2 from = state.ball();
        const Vec2 to = state.teammate(j).position;
        const double stretch = testing::uniform(rng, 1.0, 2.0);
        const Vec2 further = state.pitch().clamp({from.x + stretch * (to.x - from.x), from.y + stretch * (to.y - from.y)});
        if (distance(from, further) < distance(from, to) ||
            std::abs((further.x - from.x) * (to.y - from.y) - (further.y - from.y) * (to.x - from.x)) > 1e-9)
            continue; // clamping bent the ray
        TeamPositions team = state.team();
        team[j.slot()].position = further;
        const MatchState moved(state.pitch(), team, state.opponents(), state.holder());
        ASSERT_LE(default_pass_prob(moved, j, tau), default_pass_prob(state, j, tau) + 1e-15);
    }
}

TEST(EstimatorConstants, Validation) {
    EstimatorConstants c;
    c.score_decay = 0.0;
    EXPECT_THROW(validate(c), ValidationError);
    c = {};
    c.risk_score_weight = 1.5;
    EXPECT_THROW(default_estimators(c), ValidationError);
}

} // namespace
} // namespace fournet
