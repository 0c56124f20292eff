#pragma once

#include "fournet/decision.hpp"
#include "fournet/network.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fournet {

struct PassCompleted {
    friend bool operator==(const PassCompleted&, const PassCompleted&) = default;
};
struct PassIntercepted {
    friend bool operator==(const PassIntercepted&, const PassIntercepted&) = default;
};
struct ShotTaken {
    bool scored = false;
    friend bool operator==(const ShotTaken&, const ShotTaken&) = default;
};
struct ForcedLoss {
    friend bool operator==(const ForcedLoss&, const ForcedLoss&) = default;
};

using StepOutcome = std::variant<PassCompleted, PassIntercepted, ShotTaken, ForcedLoss>;

[[nodiscard]] bool is_terminal(const StepOutcome& outcome) noexcept;

// "pass_completed", "pass_intercepted", "shot_scored", "shot_missed", "forced_loss"
std::string_view to_string(const StepOutcome& outcome);
StepOutcome parse_outcome(std::string_view text);

struct PossessionStep {
    DecisionNetwork network;
    Decision decision;
    StepOutcome outcome;

    friend bool operator==(const PossessionStep&, const PossessionStep&) = default;
};

// Describes the first structural violation in a step list, or nullopt when the
// steps form a valid possession: nonempty, passes chain holder to holder, only
// the last step is terminal, shots only end in ShotTaken.
std::optional<std::string> find_sequence_violation(std::span<const PossessionStep> steps);

class PossessionSequence {
public:
    // Throws ValidationError when find_sequence_violation reports a problem.
    explicit PossessionSequence(std::vector<PossessionStep> steps);

    [[nodiscard]] std::span<const PossessionStep> steps() const noexcept { return steps_; }
    [[nodiscard]] std::size_t size() const noexcept { return steps_.size(); }
    [[nodiscard]] const PossessionStep& final_step() const noexcept { return steps_.back(); }

    friend bool operator==(const PossessionSequence&, const PossessionSequence&) = default;

private:
    std::vector<PossessionStep> steps_;
};

// Largest s for which the sequence is s-efficient: max of the holders' s.
double efficiency(const PossessionSequence& seq);
bool is_s_efficient(const PossessionSequence& seq, double s);

// Largest p for which the sequence is p-secure: min p over attempted passes,
// 1 when no pass was attempted.
double security(const PossessionSequence& seq);
bool is_p_secure(const PossessionSequence& seq, double p);

// p of the pass attempted in this step, if the step is a pass.
std::optional<double> attempted_pass_prob(const PossessionStep& step);

// Efficiency/security maintained step by step during a rollout.
class RunningMetrics {
public:
    void observe(const PossessionStep& step);

    [[nodiscard]] double efficiency() const noexcept { return efficiency_; }
    [[nodiscard]] double security() const noexcept { return security_; }
    [[nodiscard]] std::size_t steps() const noexcept { return steps_; }

private:
    double efficiency_ = 0.0;
    double security_ = 1.0;
    std::size_t steps_ = 0;
};

struct ObjectivePoint {
    double efficiency;
    double security;
};

struct FrontierPoint {
    double efficiency;
    double security;
    std::size_t index; // position in the input collection

    friend bool operator==(const FrontierPoint&, const FrontierPoint&) = default;
};

// Non-dominated (efficiency, security) points, sorted by efficiency
// descending, then input index ascending. Throws on empty input.
std::vector<FrontierPoint> pareto_frontier(std::span<const ObjectivePoint> points);
std::vector<FrontierPoint> pareto_frontier(std::span<const PossessionSequence> seqs);

// Scalarized ranking helper: min(efficiency / s_target, security / p_target).
// Targets must be in (0, 1].
double balance_score(const ObjectivePoint& point, double s_target, double p_target);

} // namespace fournet
