#pragma once

#include "fournet/decision.hpp"
#include "fournet/estimators.hpp"
#include "fournet/serialization.hpp"
#include "fournet/simulation.hpp"

#include <cstdint>
#include <filesystem>

namespace fournet {

struct SimulationDefaults {
    int max_steps = 30;
    double drift = 2.0;
    double threshold = 0.5;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    TieBreak tie_break = TieBreak::LowestId;

    friend bool operator==(const SimulationDefaults&, const SimulationDefaults&) = default;
};

// Every tunable constant of the tool. Serialized as
// {"estimators": {...}, "simulation": {...}}.
struct Config {
    EstimatorConstants estimators{};
    SimulationDefaults simulation{};

    friend bool operator==(const Config&, const Config&) = default;
};

Json to_json(const Config& config);

// Keys absent from `j` keep their defaults; unknown keys are rejected.
Config config_from_json(const Json& j);
Config load_config(const std::filesystem::path& path);

SimulationConfig make_simulation_config(const Config& config, const StyleFunction& style);

} // namespace fournet
