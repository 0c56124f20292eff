#include "fournet/match_state.hpp"

#include "fournet/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace fournet {

double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double distance_to_segment(Vec2 point, Vec2 a, Vec2 b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0)
        return distance(point, a);
    double t = ((point.x - a.x) * dx + (point.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(point, Vec2{a.x + t * dx, a.y + t * dy});
}

Vec2 Pitch::clamp(Vec2 p) const noexcept {
    return {std::clamp(p.x, 0.0, length), std::clamp(p.y, 0.0, width)};
}

MatchState::MatchState(Pitch pitch, TeamPositions team, OpponentPositions opponents, PlayerId holder)
    : pitch_(pitch), team_(team), opponents_(opponents), holder_(holder) {
    if (!(pitch.length > 0.0) || !std::isfinite(pitch.length))
        throw ValidationError(fmt::format("pitch length {} must be positive", pitch.length));
    if (!(pitch.width > 0.0) || !std::isfinite(pitch.width))
        throw ValidationError(fmt::format("pitch width {} must be positive", pitch.width));
    for (PlayerId id : all_players()) {
        const auto& mate = team_[id.slot()];
        if (!std::isfinite(mate.position.x) || !std::isfinite(mate.position.y))
            throw ValidationError(fmt::format("teammate {}: non-finite position", id.value()));
        if (!mate.outside && !pitch.contains(mate.position))
            throw ValidationError(fmt::format("teammate {}: position ({}, {}) outside the pitch",
                                              id.value(), mate.position.x, mate.position.y));
    }
    for (std::size_t k = 0; k < opponents_.size(); ++k) {
        if (!pitch.contains(opponents_[k]))
            throw ValidationError(fmt::format("opponent {}: position ({}, {}) outside the pitch", k,
                                              opponents_[k].x, opponents_[k].y));
    }
    if (team_[holder.slot()].outside)
        throw ValidationError(fmt::format("holder {} is flagged outside", holder.value()));
}

MatchState MatchState::with_holder(PlayerId holder) const {
    return MatchState(pitch_, team_, opponents_, holder);
}

double second_last_defender_x(const MatchState& state) {
    std::array<double, kTeamSize> xs{};
    std::ranges::transform(state.opponents(), xs.begin(), &Vec2::x);
    std::ranges::partial_sort(xs, xs.begin() + 2, std::greater<>{});
    return xs[1];
}

bool is_offside(const MatchState& state, PlayerId j) {
    const double x = state.teammate(j).position.x;
    return x > state.ball().x && x > second_last_defender_x(state);
}

bool is_available(const MatchState& state, PlayerId j) {
    return !state.teammate(j).outside && !is_offside(state, j);
}

double nearest_opponent_distance(const MatchState& state, Vec2 point) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& opp : state.opponents())
        best = std::min(best, distance(point, opp));
    return best;
}

} // namespace fournet
