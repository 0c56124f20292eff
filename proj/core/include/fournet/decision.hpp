#pragma once

#include "fournet/network.hpp"
#include "fournet/style.hpp"

#include <string_view>
#include <variant>
#include <vector>

namespace fournet {

// Ordering applied among teammates with equal style score.
enum class TieBreak { LowestId, HighestId };

class DecisionPolicy {
public:
    // threshold is the scoring probability at or above which the holder shoots.
    DecisionPolicy(StyleFunction style, double threshold, TieBreak tie_break = TieBreak::LowestId);
    DecisionPolicy(const LinearStyle& style, double threshold, TieBreak tie_break = TieBreak::LowestId);

    [[nodiscard]] const StyleFunction& style() const noexcept { return style_; }
    [[nodiscard]] double threshold() const noexcept { return threshold_; }
    [[nodiscard]] TieBreak tie_break() const noexcept { return tie_break_; }

private:
    StyleFunction style_;
    double threshold_;
    TieBreak tie_break_;
};

struct Shoot {
    friend bool operator==(const Shoot&, const Shoot&) = default;
};

struct Pass {
    PlayerId target;
    double score = 0.0;
    // Set when the best available score is 0, e.g. every teammate unavailable.
    bool degenerate = false;

    friend bool operator==(const Pass&, const Pass&) = default;
};

using Decision = std::variant<Shoot, Pass>;

struct RankedOption {
    PlayerId id;
    double score;

    friend bool operator==(const RankedOption&, const RankedOption&) = default;
};

Decision decide(const DecisionNetwork& network, const DecisionPolicy& policy);

// All ten teammates, best score first; ties ordered by the policy's tie-break.
std::vector<RankedOption> ranked_options(const DecisionNetwork& network, const DecisionPolicy& policy);

[[nodiscard]] inline bool is_shoot(const Decision& d) noexcept { return std::holds_alternative<Shoot>(d); }

std::string_view to_string(TieBreak t);
TieBreak parse_tie_break(std::string_view text);

} // namespace fournet
