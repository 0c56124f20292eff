#include "fournet/decision.hpp"

#include "fournet/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace fournet {

DecisionPolicy::DecisionPolicy(StyleFunction style, double threshold, TieBreak tie_break)
    : style_(std::move(style)), threshold_(threshold), tie_break_(tie_break) {
    if (!style_)
        throw ValidationError("decision policy needs a style function");
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw ValidationError(fmt::format("threshold {} outside [0, 1]", threshold));
}

DecisionPolicy::DecisionPolicy(const LinearStyle& style, double threshold, TieBreak tie_break)
    : DecisionPolicy(StyleFunction(style), threshold, tie_break) {}

std::vector<RankedOption> ranked_options(const DecisionNetwork& network, const DecisionPolicy& policy) {
    std::vector<RankedOption> ranked;
    ranked.reserve(network.edges().size());
    for (const auto& e : network.edges()) {
        double score = policy.style()(e.vector.p, e.vector.r);
        if (!std::isfinite(score))
            throw ValidationError(fmt::format("style function returned {} for teammate {}", score,
                                              e.to.value()));
        ranked.push_back({e.to, score});
    }

    const bool lowest_first = policy.tie_break() == TieBreak::LowestId;
    std::ranges::sort(ranked, [lowest_first](const RankedOption& a, const RankedOption& b) {
        if (a.score != b.score)
            return a.score > b.score;
        return lowest_first ? a.id < b.id : a.id > b.id;
    });
    return ranked;
}

Decision decide(const DecisionNetwork& network, const DecisionPolicy& policy) {
    if (network.s() >= policy.threshold())
        return Shoot{};
    const auto best = ranked_options(network, policy).front();
    return Pass{best.id, best.score, best.score == 0.0};
}

std::string_view to_string(TieBreak t) {
    return t == TieBreak::LowestId ? "lowest-id" : "highest-id";
}

TieBreak parse_tie_break(std::string_view text) {
    if (text == "lowest-id")
        return TieBreak::LowestId;
    if (text == "highest-id")
        return TieBreak::HighestId;
    throw ValidationError(fmt::format("unknown tie-break rule '{}'", text));
}

} // namespace fournet
