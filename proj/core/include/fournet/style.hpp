#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace fournet {

// Scores a pass option from its completion probability and receiver risk.
using StyleFunction = std::function<double(double pass_prob, int risk)>;

// Linear game style: pass_weight * 10p + risk_weight * r, with nonnegative
// integer weights that are not both zero.
class LinearStyle {
public:
    LinearStyle(int pass_weight, int risk_weight);

    [[nodiscard]] int pass_weight() const noexcept { return pass_weight_; }
    [[nodiscard]] int risk_weight() const noexcept { return risk_weight_; }

    // Unchecked evaluation; see evaluate() for the range-checked form.
    [[nodiscard]] double operator()(double pass_prob, int risk) const noexcept {
        return pass_weight_ * (10.0 * pass_prob) + static_cast<double>(risk_weight_) * risk;
    }

    friend bool operator==(const LinearStyle&, const LinearStyle&) = default;

private:
    int pass_weight_;
    int risk_weight_;
};

enum class StyleClass { Possession, Direct, Balanced };

struct Importance {
    double pass = 0.0;
    double risk = 0.0;
};

double evaluate(const LinearStyle& style, double pass_prob, int risk);
Importance importance(const LinearStyle& style);
StyleClass classify(const LinearStyle& style);

std::string_view to_string(StyleClass c);

// "x:y" notation, e.g. "3:1".
LinearStyle parse_style(std::string_view text);
std::string to_string(const LinearStyle& style);

} // namespace fournet
