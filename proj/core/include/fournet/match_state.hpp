#pragma once

#include "fournet/network.hpp"

#include <array>

namespace fournet {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

double distance(Vec2 a, Vec2 b);

// Distance from point to the segment [a, b].
double distance_to_segment(Vec2 point, Vec2 a, Vec2 b);

// The team in possession attacks toward x = length; its target goal is centred
// at (length, width / 2).
struct Pitch {
    double length = 105.0;
    double width = 68.0;

    [[nodiscard]] Vec2 goal_center() const noexcept { return {length, width / 2.0}; }
    [[nodiscard]] bool contains(Vec2 p) const noexcept {
        return p.x >= 0.0 && p.x <= length && p.y >= 0.0 && p.y <= width;
    }
    [[nodiscard]] Vec2 clamp(Vec2 p) const noexcept;

    friend bool operator==(const Pitch&, const Pitch&) = default;
};

struct Teammate {
    Vec2 position;
    // Off the field of play; exempt from the pitch-bounds check.
    bool outside = false;

    friend bool operator==(const Teammate&, const Teammate&) = default;
};

using TeamPositions = std::array<Teammate, kTeamSize>; // indexed by PlayerId::slot()
using OpponentPositions = std::array<Vec2, kTeamSize>;

class MatchState {
public:
    MatchState(Pitch pitch, TeamPositions team, OpponentPositions opponents, PlayerId holder);

    [[nodiscard]] const Pitch& pitch() const noexcept { return pitch_; }
    [[nodiscard]] const TeamPositions& team() const noexcept { return team_; }
    [[nodiscard]] const Teammate& teammate(PlayerId id) const noexcept { return team_[id.slot()]; }
    [[nodiscard]] const OpponentPositions& opponents() const noexcept { return opponents_; }
    [[nodiscard]] PlayerId holder() const noexcept { return holder_; }
    [[nodiscard]] Vec2 ball() const noexcept { return team_[holder_.slot()].position; }

    [[nodiscard]] MatchState with_holder(PlayerId holder) const;

    friend bool operator==(const MatchState&, const MatchState&) = default;

private:
    Pitch pitch_;
    TeamPositions team_;
    OpponentPositions opponents_;
    PlayerId holder_;
};

// x-coordinate of the second-last opponent in the attack direction.
double second_last_defender_x(const MatchState& state);

// Ahead of the ball and ahead of the second-last opponent.
bool is_offside(const MatchState& state, PlayerId j);

// Neither offside nor off the pitch.
bool is_available(const MatchState& state, PlayerId j);

double nearest_opponent_distance(const MatchState& state, Vec2 point);

} // namespace fournet
