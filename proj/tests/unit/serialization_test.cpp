#include "fournet/config.hpp"
#include "fournet/error.hpp"
#include "fournet/serialization.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

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

std::string data_file(const std::string& name) { return slurp(std::string(FOURNET_SOURCE_DIR) + "/data/" + name); }

void expect_error_mentions(const std::string& text, std::initializer_list<std::string_view> needles) {
    try {
        parse_match_state(text);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        for (auto n : needles)
            EXPECT_NE(std::string(e.what()).find(n), std::string::npos) << e.what() << " lacks " << n;
    }
}

TEST(NetworkJson, LosslessRoundTrip) {
    testing::Rng rng(43);
    for (int k = 0; k < 1000; ++k) {
        auto n = testing::random_network(rng);
        if (k % 3 == 0)
            n = mark_unavailable(n, testing::random_teammate(rng, n.holder()));
        const auto text = dump_canonical(to_json(n));
        const auto back = network_from_json(parse_json(text));
        ASSERT_EQ(back, n);
        ASSERT_EQ(dump_canonical(to_json(back)), text);
    }
}

TEST(NetworkJson, Layout) {
    std::map<PlayerId, PassOption> options;
    for (PlayerId j : all_players())
        if (j != PlayerId(8))
            options.emplace(j, PassOption{0.5, 2});
    const auto j = to_json(build_network(PlayerId(8), 0.8, 2.0, options));
    EXPECT_EQ(j["holder"], 8);
    EXPECT_EQ(j["s"], 0.8);
    EXPECT_EQ(j["tau"], 2.0);
    ASSERT_EQ(j["edges"].size(), 10u);
    EXPECT_EQ(j["edges"][0], (Json{{"to", 1}, {"p", 0.5}, {"r", 2}}));
}

TEST(NetworkJson, Errors) {
    EXPECT_THROW(network_from_json(parse_json(R"({"holder": 3, "s": 0.1, "tau": 1.0, "edges": []})")), ValidationError);
    EXPECT_THROW(network_from_json(parse_json(R"({"holder": 3, "s": 0.1, "edges": []})")), ValidationError);
    EXPECT_THROW(network_from_json(parse_json(R"({"holder": 13, "s": 0.1, "tau": 1.0, "edges": []})")), ValidationError);
}

class ShippedState : public ::testing::TestWithParam<std::string> {};

TEST_P(ShippedState, RoundTripsToIdenticalBytes) {
    const auto text = data_file(GetParam());
    EXPECT_EQ(serialize_match_state(parse_match_state(text)), text);
}

INSTANTIATE_TEST_SUITE_P(Data, ShippedState, ::testing::Values("test_state.json", "midfield_state.json"));

TEST(MatchStateJson, OutsideFlagRoundTrips) {
    auto j = parse_json(data_file("test_state.json"));
    j["team"][10]["y"] = 70.5;
    j["team"][10]["outside"] = true;
    const auto state = match_state_from_json(j);
    EXPECT_TRUE(state.teammate(PlayerId(11)).outside);
    EXPECT_EQ(to_json(state), j);
}

TEST(MatchStateJson, Diagnostics) {
    auto j = parse_json(data_file("test_state.json"));

    auto short_team = j;
    short_team["team"].erase(short_team["team"].size() - 1);
    expect_error_mentions(short_team.dump(), {"team", "expected 11"});

    auto bad_holder = j;
    bad_holder["holder"] = 12;
    expect_error_mentions(bad_holder.dump(), {"holder"});

    auto off_pitch = j;
    off_pitch["team"][2]["x"] = 120.0;
    expect_error_mentions(off_pitch.dump(), {"$.team[2].x", "outside"});

    auto opp_off = j;
    opp_off["opponents"][4]["y"] = -3.0;
    expect_error_mentions(opp_off.dump(), {"$.opponents[4].y"});

    auto missing = j;
    missing["pitch"].erase("width");
    expect_error_mentions(missing.dump(), {"$.pitch", "width"});

    auto dup = j;
    dup["team"][1]["id"] = 1;
    expect_error_mentions(dup.dump(), {"$.team[1].id", "duplicate"});

    auto wrong_type = j;
    wrong_type["holder"] = "eight";
    expect_error_mentions(wrong_type.dump(), {"$.holder", "integer"});

    auto outside_holder = j;
    outside_holder["team"][7]["outside"] = true;
    expect_error_mentions(outside_holder.dump(), {"holder"});

    expect_error_mentions("{\"pitch\": ", {"malformed JSON"});
}

TEST(SequenceJson, ShippedLogRoundTrips) {
    const auto text = data_file("example_sequence.json");
    const auto seqs = parse_sequence_logs(text);
    ASSERT_EQ(seqs.size(), 1u);
    EXPECT_EQ(dump_canonical(to_json(seqs.front())), text);
}

TEST(SequenceJson, MultiLogAndValidation) {
    testing::Rng rng(47);
    std::vector<PossessionSequence> seqs;
    for (int k = 0; k < 5; ++k)
        seqs.push_back(testing::random_sequence(rng, 8));
    const auto back = parse_sequence_logs(dump_canonical(to_json(seqs)));
    EXPECT_EQ(back, seqs);

    auto j = to_json(seqs.front());
    j.back()["outcome"] = "pass_completed";
    EXPECT_THROW(sequence_from_json(j), ValidationError);
    j.back()["outcome"] = "offside";
    EXPECT_THROW(sequence_from_json(j), ValidationError);
    EXPECT_THROW(parse_sequence_logs("[]"), ValidationError);
}

TEST(DecisionJson, Forms) {
    EXPECT_EQ(to_json(Decision{Shoot{}}), (Json{{"type", "shoot"}}));
    const Decision pass = Pass{PlayerId(9), 12.5, false};
    EXPECT_EQ(decision_from_json(to_json(pass)), pass);
    EXPECT_EQ(decision_from_json(parse_json(R"({"type": "pass", "target": 4})")), Decision{Pass{PlayerId(4)}});
    EXPECT_THROW(decision_from_json(parse_json(R"({"type": "dribble"})")), ValidationError);
}

TEST(ConfigJson, DefaultsPartialOverrideAndErrors) {
    const Config defaults;
    EXPECT_EQ(config_from_json(to_json(defaults)), defaults);
    EXPECT_EQ(config_from_json(Json::object()), defaults);

    const auto c = config_from_json(parse_json(R"({"estimators": {"score_decay": 25}, "simulation": {"seed": 9, "tie_break": "highest-id"}})"));
    EXPECT_EQ(c.estimators.score_decay, 25.0);
    EXPECT_EQ(c.estimators.pass_decay, 30.0);
    EXPECT_EQ(c.simulation.seed, 9u);
    EXPECT_EQ(c.simulation.tie_break, TieBreak::HighestId);

    EXPECT_THROW(config_from_json(parse_json(R"({"estimators": {"decay": 1}})")), ValidationError);
    EXPECT_THROW(config_from_json(parse_json(R"({"extra": {}})")), ValidationError);
    EXPECT_THROW(config_from_json(parse_json(R"({"simulation": {"max_steps": "many"}})")), ValidationError);
    EXPECT_THROW(config_from_json(parse_json(R"({"simulation": {"max_steps": 0}})")), ValidationError);
    EXPECT_THROW(config_from_json(parse_json(R"({"simulation": {"threads": -1}})")), ValidationError);
    EXPECT_THROW(config_from_json(parse_json(R"({"estimators": {"lane_half_width": -2}})")), ValidationError);
}

TEST(ConfigJson, ShippedDefaultConfigMatchesBuiltIns) {
    EXPECT_EQ(config_from_json(parse_json(data_file("default_config.json"))), Config{});
}

} // namespace
} // namespace fournet
