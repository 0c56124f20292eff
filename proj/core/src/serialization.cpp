#include "fournet/serialization.hpp"

#include "fournet/error.hpp"

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <optional>

namespace fournet {

namespace {

// Reads fields of a JSON document while tracking the JSON path, so every
// diagnostic can point at the offending value.
class Reader {
public:
    Reader(const Json& node, std::string path) : node_(node), path_(std::move(path)) {}

    [[nodiscard]] const std::string& path() const noexcept { return path_; }
    [[nodiscard]] const Json& node() const noexcept { return node_; }

    [[noreturn]] void fail(std::string_view what) const {
        throw ValidationError(fmt::format("{}: {}", path_, what));
    }

    void expect_object() const {
        if (!node_.is_object())
            fail("expected an object");
    }
    void expect_array() const {
        if (!node_.is_array())
            fail("expected an array");
    }

    [[nodiscard]] Reader field(std::string_view key) const {
        expect_object();
        auto it = node_.find(std::string(key));
        if (it == node_.end())
            fail(fmt::format("missing field \"{}\"", key));
        return Reader(*it, fmt::format("{}.{}", path_, key));
    }

    [[nodiscard]] std::optional<Reader> optional_field(std::string_view key) const {
        expect_object();
        auto it = node_.find(std::string(key));
        if (it == node_.end())
            return std::nullopt;
        return Reader(*it, fmt::format("{}.{}", path_, key));
    }

    [[nodiscard]] Reader element(std::size_t i) const {
        return Reader(node_.at(i), fmt::format("{}[{}]", path_, i));
    }

    [[nodiscard]] std::size_t size() const {
        expect_array();
        return node_.size();
    }

    [[nodiscard]] double number() const {
        if (!node_.is_number())
            fail("expected a number");
        double v = node_.get<double>();
        if (!std::isfinite(v))
            fail("expected a finite number");
        return v;
    }

    [[nodiscard]] long long integer() const {
        if (!node_.is_number_integer())
            fail("expected an integer");
        return node_.get<long long>();
    }

    [[nodiscard]] bool boolean() const {
        if (!node_.is_boolean())
            fail("expected true or false");
        return node_.get<bool>();
    }

    [[nodiscard]] std::string string() const {
        if (!node_.is_string())
            fail("expected a string");
        return node_.get<std::string>();
    }

    [[nodiscard]] PlayerId player_id() const {
        auto v = integer();
        if (v < 1 || v > kTeamSize)
            fail(fmt::format("player id {} outside 1..{}", v, kTeamSize));
        return PlayerId(static_cast<int>(v));
    }

private:
    const Json& node_;
    std::string path_;
};

// Rewraps a ValidationError raised by a domain constructor with the path of
// the object being built.
template <class F>
auto with_path(const Reader& at, F&& build) {
    try {
        return build();
    } catch (const ValidationError& e) {
        at.fail(e.what());
    }
}

DecisionNetwork read_network(const Reader& in) {
    in.expect_object();
    const PlayerId holder = in.field("holder").player_id();
    const double s = in.field("s").number();
    const double tau = in.field("tau").number();
    const Reader edges = in.field("edges");
    std::vector<NetworkEdge> out;
    out.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Reader e = edges.element(i);
        const PlayerId to = e.field("to").player_id();
        const double p = e.field("p").number();
        const long long r = e.field("r").integer();
        if (r < 0 || r > kMaxRisk)
            e.field("r").fail(fmt::format("risk {} outside 0..{}", r, kMaxRisk));
        out.push_back({to, EdgeVector4{s, tau, p, static_cast<int>(r)}});
    }
    return with_path(in, [&] { return DecisionNetwork::from_edges(holder, std::move(out)); });
}

Decision read_decision(const Reader& in) {
    const std::string type = in.field("type").string();
    if (type == "shoot")
        return Shoot{};
    if (type != "pass")
        in.field("type").fail(fmt::format("unknown decision type '{}'", type));
    Pass pass{in.field("target").player_id()};
    if (auto score = in.optional_field("score"))
        pass.score = score->number();
    if (auto degenerate = in.optional_field("degenerate"))
        pass.degenerate = degenerate->boolean();
    return pass;
}

PossessionSequence read_sequence(const Reader& in) {
    std::vector<PossessionStep> steps;
    steps.reserve(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        const Reader step = in.element(i);
        auto network = read_network(step.field("network"));
        auto decision = read_decision(step.field("decision"));
        const Reader outcome_field = step.field("outcome");
        auto outcome = with_path(outcome_field, [&] { return parse_outcome(outcome_field.string()); });
        steps.push_back({std::move(network), decision, outcome});
    }
    return with_path(in, [&] { return PossessionSequence(std::move(steps)); });
}

MatchState read_match_state(const Reader& in) {
    in.expect_object();
    const Reader pitch_in = in.field("pitch");
    Pitch pitch{pitch_in.field("length").number(), pitch_in.field("width").number()};
    if (!(pitch.length > 0.0))
        pitch_in.field("length").fail("must be positive");
    if (!(pitch.width > 0.0))
        pitch_in.field("width").fail("must be positive");

    const Reader team_in = in.field("team");
    if (team_in.size() != kTeamSize)
        team_in.fail(fmt::format("expected {} players, got {}", kTeamSize, team_in.size()));
    TeamPositions team{};
    std::array<bool, kTeamSize> seen{};
    for (std::size_t i = 0; i < kTeamSize; ++i) {
        const Reader mate = team_in.element(i);
        const PlayerId id = mate.field("id").player_id();
        if (seen[id.slot()])
            mate.field("id").fail(fmt::format("duplicate player id {}", id.value()));
        seen[id.slot()] = true;
        Teammate t{{mate.field("x").number(), mate.field("y").number()}, false};
        if (auto outside = mate.optional_field("outside"))
            t.outside = outside->boolean();
        if (!t.outside) {
            if (t.position.x < 0.0 || t.position.x > pitch.length)
                mate.field("x").fail(fmt::format("{} outside [0, {}]", t.position.x, pitch.length));
            if (t.position.y < 0.0 || t.position.y > pitch.width)
                mate.field("y").fail(fmt::format("{} outside [0, {}]", t.position.y, pitch.width));
        }
        team[id.slot()] = t;
    }

    const Reader opp_in = in.field("opponents");
    if (opp_in.size() != kTeamSize)
        opp_in.fail(fmt::format("expected {} players, got {}", kTeamSize, opp_in.size()));
    OpponentPositions opponents{};
    for (std::size_t i = 0; i < kTeamSize; ++i) {
        const Reader opp = opp_in.element(i);
        Vec2 pos{opp.field("x").number(), opp.field("y").number()};
        if (pos.x < 0.0 || pos.x > pitch.length)
            opp.field("x").fail(fmt::format("{} outside [0, {}]", pos.x, pitch.length));
        if (pos.y < 0.0 || pos.y > pitch.width)
            opp.field("y").fail(fmt::format("{} outside [0, {}]", pos.y, pitch.width));
        opponents[i] = pos;
    }

    const Reader holder_in = in.field("holder");
    const long long holder = holder_in.integer();
    if (holder < 1 || holder > kTeamSize)
        holder_in.fail(fmt::format("id {} is not in the team array", holder));
    return with_path(in, [&] { return MatchState(pitch, team, opponents, PlayerId(static_cast<int>(holder))); });
}

} // namespace

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view bytes) {
    try {
        return Json::parse(bytes.begin(), bytes.end());
    } catch (const Json::parse_error& e) {
        throw ValidationError(fmt::format("malformed JSON: {}", e.what()));
    }
}

Json to_json(const DecisionNetwork& network) {
    Json edges = Json::array();
    for (const auto& e : network.edges())
        edges.push_back(Json{{"to", e.to.value()}, {"p", e.vector.p}, {"r", e.vector.r}});
    return Json{{"holder", network.holder().value()}, {"s", network.s()}, {"tau", network.tau()}, {"edges", edges}};
}

DecisionNetwork network_from_json(const Json& j) { return read_network(Reader(j, "$")); }

Json to_json(const MatchState& state) {
    Json team = Json::array();
    for (PlayerId id : all_players()) {
        const auto& mate = state.teammate(id);
        Json entry{{"id", id.value()}, {"x", mate.position.x}, {"y", mate.position.y}};
        if (mate.outside)
            entry["outside"] = true;
        team.push_back(std::move(entry));
    }
    Json opponents = Json::array();
    for (const auto& opp : state.opponents())
        opponents.push_back(Json{{"x", opp.x}, {"y", opp.y}});
    return Json{{"pitch", Json{{"length", state.pitch().length}, {"width", state.pitch().width}}},
                {"team", team},
                {"opponents", opponents},
                {"holder", state.holder().value()}};
}

MatchState match_state_from_json(const Json& j) { return read_match_state(Reader(j, "$")); }

MatchState parse_match_state(std::string_view bytes) { return match_state_from_json(parse_json(bytes)); }

std::string serialize_match_state(const MatchState& state) { return dump_canonical(to_json(state)); }

Json to_json(const Decision& decision) {
    if (is_shoot(decision))
        return Json{{"type", "shoot"}};
    const auto& pass = std::get<Pass>(decision);
    return Json{{"type", "pass"}, {"target", pass.target.value()}, {"score", pass.score}, {"degenerate", pass.degenerate}};
}

Decision decision_from_json(const Json& j) { return read_decision(Reader(j, "$")); }

Json to_json(const PossessionSequence& seq) {
    Json steps = Json::array();
    for (const auto& step : seq.steps())
        steps.push_back(Json{{"network", to_json(step.network)},
                             {"decision", to_json(step.decision)},
                             {"outcome", std::string(to_string(step.outcome))}});
    return steps;
}

PossessionSequence sequence_from_json(const Json& j) { return read_sequence(Reader(j, "$")); }

std::vector<PossessionSequence> parse_sequence_logs(std::string_view bytes) {
    const Json j = parse_json(bytes);
    const Reader root(j, "$");
    if (root.size() == 0)
        root.fail("empty log");
    std::vector<PossessionSequence> out;
    if (j.front().is_array()) {
        for (std::size_t i = 0; i < root.size(); ++i)
            out.push_back(read_sequence(root.element(i)));
    } else {
        out.push_back(read_sequence(root));
    }
    return out;
}

Json to_json(const std::vector<PossessionSequence>& seqs) {
    Json out = Json::array();
    for (const auto& seq : seqs)
        out.push_back(to_json(seq));
    return out;
}

} // namespace fournet
