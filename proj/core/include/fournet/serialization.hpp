#pragma once

#include "fournet/decision.hpp"
#include "fournet/match_state.hpp"
#include "fournet/network.hpp"
#include "fournet/sequence.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace fournet {

// Field order follows insertion order, so serialized output is canonical.
using Json = nlohmann::ordered_json;

// Two-space indented dump with a trailing newline. Doubles are written in
// shortest round-trip form and always carry a decimal point or exponent.
std::string dump_canonical(const Json& j);

// Parses text, turning syntax errors into ValidationError.
Json parse_json(std::string_view bytes);

// {"holder": int, "s": num, "tau": num, "edges": [{"to": int, "p": num, "r": int}, ...]}
Json to_json(const DecisionNetwork& network);
DecisionNetwork network_from_json(const Json& j);

// {"pitch": {"length", "width"}, "team": [{"id", "x", "y", "outside"?}...],
//  "opponents": [{"x", "y"}...], "holder": int}
Json to_json(const MatchState& state);
MatchState match_state_from_json(const Json& j);
MatchState parse_match_state(std::string_view bytes);
std::string serialize_match_state(const MatchState& state);

// {"type": "shoot"} or {"type": "pass", "target": int, "score": num, "degenerate": bool}
Json to_json(const Decision& decision);
Decision decision_from_json(const Json& j);

// A sequence log is a JSON array of steps:
// {"network": <network>, "decision": <decision>, "outcome": string}
Json to_json(const PossessionSequence& seq);
PossessionSequence sequence_from_json(const Json& j);

// Accepts either one sequence log or an array of sequence logs.
std::vector<PossessionSequence> parse_sequence_logs(std::string_view bytes);
Json to_json(const std::vector<PossessionSequence>& seqs);

} // namespace fournet
