#include "fournet/config.hpp"

#include "fournet/error.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>

namespace fournet {

namespace {

template <class T>
void read_into(const Json& section, std::string_view section_name, std::string_view key, T& out) {
    auto it = section.find(std::string(key));
    if (it == section.end())
        return;
    const bool ok = [&] {
        if constexpr (std::is_same_v<T, double>)
            return it->is_number();
        else
            return it->is_number_integer() && (std::is_signed_v<T> || it->is_number_unsigned() || it->template get<long long>() >= 0);
    }();
    if (!ok)
        throw ValidationError(fmt::format("config {}.{}: wrong type", section_name, key));
    out = it->template get<T>();
}

void reject_unknown(const Json& section, std::string_view section_name,
                    std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : section.items()) {
        bool found = false;
        for (auto k : known)
            found = found || k == key;
        if (!found)
            throw ValidationError(fmt::format("config {}: unknown key \"{}\"", section_name, key));
    }
}

} // namespace

Json to_json(const Config& config) {
    const auto& e = config.estimators;
    const auto& s = config.simulation;
    return Json{
        {"estimators", Json{{"goal_width", e.goal_width},
                            {"score_decay", e.score_decay},
                            {"pressure_speed", e.pressure_speed},
                            {"max_decision_time", e.max_decision_time},
                            {"pass_decay", e.pass_decay},
                            {"pass_time_scale", e.pass_time_scale},
                            {"lane_half_width", e.lane_half_width},
                            {"openness_radius", e.openness_radius},
                            {"risk_score_weight", e.risk_score_weight},
                            {"risk_openness_weight", e.risk_openness_weight}}},
        {"simulation", Json{{"max_steps", s.max_steps},
                            {"drift", s.drift},
                            {"threshold", s.threshold},
                            {"seed", s.seed},
                            {"threads", s.threads},
                            {"tie_break", std::string(to_string(s.tie_break))}}},
    };
}

Config config_from_json(const Json& j) {
    if (!j.is_object())
        throw ValidationError("config: expected an object");
    reject_unknown(j, "config", {"estimators", "simulation"});
    Config config;
    if (auto it = j.find("estimators"); it != j.end()) {
        const Json& sec = *it;
        if (!sec.is_object())
            throw ValidationError("config estimators: expected an object");
        reject_unknown(sec, "estimators",
                       {"goal_width", "score_decay", "pressure_speed", "max_decision_time", "pass_decay",
                        "pass_time_scale", "lane_half_width", "openness_radius", "risk_score_weight",
                        "risk_openness_weight"});
        auto& e = config.estimators;
        read_into(sec, "estimators", "goal_width", e.goal_width);
        read_into(sec, "estimators", "score_decay", e.score_decay);
        read_into(sec, "estimators", "pressure_speed", e.pressure_speed);
        read_into(sec, "estimators", "max_decision_time", e.max_decision_time);
        read_into(sec, "estimators", "pass_decay", e.pass_decay);
        read_into(sec, "estimators", "pass_time_scale", e.pass_time_scale);
        read_into(sec, "estimators", "lane_half_width", e.lane_half_width);
        read_into(sec, "estimators", "openness_radius", e.openness_radius);
        read_into(sec, "estimators", "risk_score_weight", e.risk_score_weight);
        read_into(sec, "estimators", "risk_openness_weight", e.risk_openness_weight);
    }
    if (auto it = j.find("simulation"); it != j.end()) {
        const Json& sec = *it;
        if (!sec.is_object())
            throw ValidationError("config simulation: expected an object");
        reject_unknown(sec, "simulation", {"max_steps", "drift", "threshold", "seed", "threads", "tie_break"});
        auto& s = config.simulation;
        read_into(sec, "simulation", "max_steps", s.max_steps);
        read_into(sec, "simulation", "drift", s.drift);
        read_into(sec, "simulation", "threshold", s.threshold);
        read_into(sec, "simulation", "seed", s.seed);
        read_into(sec, "simulation", "threads", s.threads);
        if (auto tb = sec.find("tie_break"); tb != sec.end()) {
            if (!tb->is_string())
                throw ValidationError("config simulation.tie_break: wrong type");
            s.tie_break = parse_tie_break(tb->get<std::string>());
        }
    }
    validate(config.estimators);
    if (config.simulation.max_steps < 1)
        throw ValidationError("config simulation.max_steps must be at least 1");
    if (!(config.simulation.drift >= 0.0))
        throw ValidationError("config simulation.drift must be nonnegative");
    if (!(config.simulation.threshold >= 0.0 && config.simulation.threshold <= 1.0))
        throw ValidationError("config simulation.threshold outside [0, 1]");
    return config;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError(fmt::format("cannot read config file {}", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json(parse_json(buf.str()));
}

SimulationConfig make_simulation_config(const Config& config, const StyleFunction& style) {
    const auto& sim = config.simulation;
    return SimulationConfig{
        DecisionPolicy(style, sim.threshold, sim.tie_break),
        default_estimators(config.estimators),
        sim.max_steps,
        sim.seed,
        MovementModel{sim.drift},
        sim.threads,
    };
}

} // namespace fournet
