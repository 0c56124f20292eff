#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace fournet {

inline constexpr int kTeamSize = 11;
inline constexpr int kMaxRisk = 10;

// Team-relative shirt slot, 1..11.
class PlayerId {
public:
    explicit PlayerId(int index);

    [[nodiscard]] int value() const noexcept { return index_; }
    [[nodiscard]] std::size_t slot() const noexcept { return static_cast<std::size_t>(index_ - 1); }

    friend auto operator<=>(PlayerId, PlayerId) = default;

private:
    int index_;
};

// All eleven ids in ascending order.
[[nodiscard]] std::span<const PlayerId> all_players();

// ---------------------------------------------------------------------------
// Generic n-network: a graph whose every edge carries an n-vector.

using EdgeVector = std::vector<double>;

struct NEdge {
    std::size_t a;
    std::size_t b;
    EdgeVector vector;

    friend bool operator==(const NEdge&, const NEdge&) = default;
};

class NNetwork {
public:
    explicit NNetwork(std::size_t arity);

    // Throws ValidationError when vector.size() != arity().
    void add_edge(std::size_t a, std::size_t b, EdgeVector vector);

    [[nodiscard]] std::size_t arity() const noexcept { return arity_; }
    [[nodiscard]] std::span<const NEdge> edges() const noexcept { return edges_; }

private:
    std::size_t arity_;
    std::vector<NEdge> edges_;
};

// ---------------------------------------------------------------------------
// 4-network of a ball holder's decision.

// (s, tau, p, r) on the edge {holder, j}. s and tau belong to the holder,
// p and r to the pair / receiver.
struct EdgeVector4 {
    double s = 0.0;   // holder's scoring probability
    double tau = 0.0; // seconds available to decide
    double p = 0.0;   // pass completion probability
    int r = 0;        // receiver risk, 0..10

    friend bool operator==(const EdgeVector4&, const EdgeVector4&) = default;
};

struct PassOption {
    double p = 0.0;
    int r = 0;

    friend bool operator==(const PassOption&, const PassOption&) = default;
};

struct NetworkEdge {
    PlayerId to;
    EdgeVector4 vector;

    friend bool operator==(const NetworkEdge&, const NetworkEdge&) = default;
};

class DecisionNetwork {
public:
    // Validates the full edge set: exactly one edge per teammate, shared (s, tau),
    // every component within bounds. Edge order in the input is irrelevant.
    static DecisionNetwork from_edges(PlayerId holder, std::vector<NetworkEdge> edges);

    [[nodiscard]] PlayerId holder() const noexcept { return holder_; }
    [[nodiscard]] double s() const noexcept { return edges_.front().vector.s; }
    [[nodiscard]] double tau() const noexcept { return edges_.front().vector.tau; }

    // Sorted by ascending teammate id; always ten entries.
    [[nodiscard]] std::span<const NetworkEdge> edges() const noexcept { return edges_; }

    // Throws ValidationError for j == holder.
    [[nodiscard]] const EdgeVector4& edge(PlayerId j) const;

    [[nodiscard]] NNetwork as_n_network() const;

    friend bool operator==(const DecisionNetwork&, const DecisionNetwork&) = default;

private:
    DecisionNetwork(PlayerId holder, std::vector<NetworkEdge> edges)
        : holder_(holder), edges_(std::move(edges)) {}

    PlayerId holder_;
    std::vector<NetworkEdge> edges_;
};

DecisionNetwork build_network(PlayerId holder, double s, double tau,
                              const std::map<PlayerId, PassOption>& per_teammate);

// Sets p = r = 0 on the edge to j (offside or off the pitch).
DecisionNetwork mark_unavailable(const DecisionNetwork& network, PlayerId j);

EdgeVector4 edge(const DecisionNetwork& network, PlayerId j);

} // namespace fournet
