#include "fournet/style.hpp"

#include "fournet/error.hpp"
#include "fournet/network.hpp"

#include <fmt/format.h>

#include <charconv>

namespace fournet {

LinearStyle::LinearStyle(int pass_weight, int risk_weight)
    : pass_weight_(pass_weight), risk_weight_(risk_weight) {
    if (pass_weight < 0 || risk_weight < 0)
        throw ValidationError(
            fmt::format("style weights must be nonnegative, got {}:{}", pass_weight, risk_weight));
    if (pass_weight == 0 && risk_weight == 0)
        throw ValidationError("style weights must not both be zero");
}

double evaluate(const LinearStyle& style, double pass_prob, int risk) {
    if (!(pass_prob >= 0.0 && pass_prob <= 1.0))
        throw ValidationError(fmt::format("pass probability {} outside [0, 1]", pass_prob));
    if (risk < 0 || risk > kMaxRisk)
        throw ValidationError(fmt::format("risk {} outside 0..{}", risk, kMaxRisk));
    return style(pass_prob, risk);
}

Importance importance(const LinearStyle& style) {
    const double total = static_cast<double>(style.pass_weight()) + style.risk_weight();
    return {style.pass_weight() / total, style.risk_weight() / total};
}

StyleClass classify(const LinearStyle& style) {
    if (style.pass_weight() > style.risk_weight())
        return StyleClass::Possession;
    if (style.pass_weight() < style.risk_weight())
        return StyleClass::Direct;
    return StyleClass::Balanced;
}

std::string_view to_string(StyleClass c) {
    switch (c) {
    case StyleClass::Possession:
        return "possession";
    case StyleClass::Direct:
        return "direct";
    case StyleClass::Balanced:
        return "balanced";
    }
    return "unknown";
}

LinearStyle parse_style(std::string_view text) {
    auto bad = [&](std::string_view why) {
        return ValidationError(fmt::format("invalid style '{}': {} (expected x:y)", text, why));
    };
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw bad("missing ':'");

    auto parse_weight = [&](std::string_view part) {
        if (part.empty())
            throw bad("empty weight");
        if (part.front() == '-')
            throw bad("weights must be nonnegative");
        int value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size())
            throw bad("weights must be integers");
        return value;
    };
    int x = parse_weight(text.substr(0, colon));
    int y = parse_weight(text.substr(colon + 1));
    if (x == 0 && y == 0)
        throw bad("weights must not both be zero");
    return LinearStyle(x, y);
}

std::string to_string(const LinearStyle& style) {
    return fmt::format("{}:{}", style.pass_weight(), style.risk_weight());
}

} // namespace fournet
