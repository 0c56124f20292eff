#pragma once

// Random inputs for property tests. Test-only; nothing here is shipped.

#include "fournet/match_state.hpp"
#include "fournet/network.hpp"
#include "fournet/sequence.hpp"
#include "fournet/style.hpp"

#include <map>
#include <random>
#include <vector>

namespace fournet::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline PlayerId random_player(Rng& rng) { return PlayerId(uniform_int(rng, 1, kTeamSize)); }

inline PlayerId random_teammate(Rng& rng, PlayerId holder) {
    int v = uniform_int(rng, 1, kTeamSize - 1);
    return PlayerId(v >= holder.value() ? v + 1 : v);
}

inline LinearStyle random_style(Rng& rng, int max_weight = 20) {
    for (;;) {
        int x = uniform_int(rng, 0, max_weight);
        int y = uniform_int(rng, 0, max_weight);
        if (x + y > 0)
            return LinearStyle(x, y);
    }
}

inline std::map<PlayerId, PassOption> random_options(Rng& rng, PlayerId holder) {
    std::map<PlayerId, PassOption> options;
    for (PlayerId j : all_players()) {
        if (j != holder)
            options.emplace(j, PassOption{uniform(rng, 0.0, 1.0), uniform_int(rng, 0, kMaxRisk)});
    }
    return options;
}

inline DecisionNetwork random_network(Rng& rng, PlayerId holder) {
    return build_network(holder, uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 4.0), random_options(rng, holder));
}

inline DecisionNetwork random_network(Rng& rng) { return random_network(rng, random_player(rng)); }

// Same network with a different holder s.
inline DecisionNetwork with_s(const DecisionNetwork& n, double s) {
    std::vector<NetworkEdge> edges(n.edges().begin(), n.edges().end());
    for (auto& e : edges)
        e.vector.s = s;
    return DecisionNetwork::from_edges(n.holder(), std::move(edges));
}

// A well-formed sequence of 1..max_len steps built directly, not simulated.
inline PossessionSequence random_sequence(Rng& rng, int max_len = 30) {
    const int len = uniform_int(rng, 1, max_len);
    std::vector<PossessionStep> steps;
    PlayerId holder = random_player(rng);
    for (int k = 0; k < len; ++k) {
        auto network = random_network(rng, holder);
        if (k + 1 < len) {
            PlayerId next = random_teammate(rng, holder);
            steps.push_back({network, Pass{next, 1.0, false}, PassCompleted{}});
            holder = next;
            continue;
        }
        switch (uniform_int(rng, 0, 3)) {
        case 0:
            steps.push_back({network, Shoot{}, ShotTaken{true}});
            break;
        case 1:
            steps.push_back({network, Shoot{}, ShotTaken{false}});
            break;
        case 2:
            steps.push_back({network, Pass{random_teammate(rng, holder), 1.0, false}, PassIntercepted{}});
            break;
        default:
            steps.push_back({network, Pass{random_teammate(rng, holder), 0.0, true}, ForcedLoss{}});
            break;
        }
    }
    return PossessionSequence(std::move(steps));
}

// Uniform positions on a default pitch; ~5% of non-holders flagged outside.
inline MatchState random_state(Rng& rng) {
    Pitch pitch;
    PlayerId holder = random_player(rng);
    TeamPositions team{};
    for (PlayerId id : all_players()) {
        Teammate t{{uniform(rng, 0.0, pitch.length), uniform(rng, 0.0, pitch.width)}, false};
        if (id != holder && uniform(rng, 0.0, 1.0) < 0.05) {
            t.outside = true;
            t.position = {uniform(rng, 0.0, pitch.length), pitch.width + uniform(rng, 0.5, 3.0)};
        }
        team[id.slot()] = t;
    }
    OpponentPositions opponents{};
    for (auto& o : opponents)
        o = {uniform(rng, 0.0, pitch.length), uniform(rng, 0.0, pitch.width)};
    return MatchState(pitch, team, opponents, holder);
}

} // namespace fournet::testing
