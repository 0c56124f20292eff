#include "fournet/network.hpp"

#include "fournet/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace fournet {

namespace {

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

void check_holder_params(double s, double tau) {
    if (!in_unit_interval(s))
        throw ValidationError(fmt::format("s={} outside [0, 1]", s));
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw ValidationError(fmt::format("tau={} must be a finite nonnegative number", tau));
}

void check_pass_option(PlayerId j, double p, int r) {
    if (!in_unit_interval(p))
        throw ValidationError(fmt::format("edge to {}: p={} outside [0, 1]", j.value(), p));
    if (r < 0 || r > kMaxRisk)
        throw ValidationError(fmt::format("edge to {}: r={} outside 0..{}", j.value(), r, kMaxRisk));
}

} // namespace

PlayerId::PlayerId(int index) : index_(index) {
    if (index < 1 || index > kTeamSize)
        throw ValidationError(fmt::format("player id {} outside 1..{}", index, kTeamSize));
}

std::span<const PlayerId> all_players() {
    static const std::array<PlayerId, kTeamSize> ids = {
        PlayerId{1}, PlayerId{2}, PlayerId{3}, PlayerId{4},  PlayerId{5},  PlayerId{6},
        PlayerId{7}, PlayerId{8}, PlayerId{9}, PlayerId{10}, PlayerId{11},
    };
    return ids;
}

NNetwork::NNetwork(std::size_t arity) : arity_(arity) {
    if (arity == 0)
        throw ValidationError("n-network arity must be at least 1");
}

void NNetwork::add_edge(std::size_t a, std::size_t b, EdgeVector vector) {
    if (vector.size() != arity_)
        throw ValidationError(fmt::format("edge {{{}, {}}} carries a {}-vector, network arity is {}", a,
                                          b, vector.size(), arity_));
    edges_.push_back(NEdge{a, b, std::move(vector)});
}

DecisionNetwork DecisionNetwork::from_edges(PlayerId holder, std::vector<NetworkEdge> edges) {
    std::array<bool, kTeamSize> seen{};
    for (const auto& e : edges) {
        if (e.to == holder)
            throw ValidationError(fmt::format("unexpected teammate id {}: holder has no self-edge",
                                              holder.value()));
        if (seen[e.to.slot()])
            throw ValidationError(fmt::format("duplicate edge to teammate {}", e.to.value()));
        seen[e.to.slot()] = true;
    }
    for (PlayerId j : all_players()) {
        if (j != holder && !seen[j.slot()])
            throw ValidationError(fmt::format("incomplete edge set: missing teammate {}", j.value()));
    }

    std::ranges::sort(edges, {}, &NetworkEdge::to);
    const auto& first = edges.front().vector;
    check_holder_params(first.s, first.tau);
    for (const auto& e : edges) {
        if (e.vector.s != first.s || e.vector.tau != first.tau)
            throw ValidationError(fmt::format(
                "edge to {}: (s, tau) = ({}, {}) disagrees with holder's ({}, {})", e.to.value(),
                e.vector.s, e.vector.tau, first.s, first.tau));
        check_pass_option(e.to, e.vector.p, e.vector.r);
    }
    return DecisionNetwork(holder, std::move(edges));
}

const EdgeVector4& DecisionNetwork::edge(PlayerId j) const {
    if (j == holder_)
        throw ValidationError(fmt::format("no edge from holder {} to itself", j.value()));
    // edges_ is sorted and skips the holder's slot
    auto index = j.slot() - (j > holder_ ? 1 : 0);
    return edges_[index].vector;
}

NNetwork DecisionNetwork::as_n_network() const {
    NNetwork net(4);
    for (const auto& e : edges_) {
        const auto& v = e.vector;
        net.add_edge(static_cast<std::size_t>(holder_.value()), static_cast<std::size_t>(e.to.value()),
                     {v.s, v.tau, v.p, static_cast<double>(v.r)});
    }
    return net;
}

DecisionNetwork build_network(PlayerId holder, double s, double tau,
                              const std::map<PlayerId, PassOption>& per_teammate) {
    if (per_teammate.contains(holder))
        throw ValidationError(
            fmt::format("unexpected teammate id {}: holder has no self-edge", holder.value()));
    std::vector<NetworkEdge> edges;
    edges.reserve(kTeamSize - 1);
    for (PlayerId j : all_players()) {
        if (j == holder)
            continue;
        auto it = per_teammate.find(j);
        if (it == per_teammate.end())
            throw ValidationError(fmt::format("incomplete edge set: missing teammate {}", j.value()));
        edges.push_back({j, EdgeVector4{s, tau, it->second.p, it->second.r}});
    }
    return DecisionNetwork::from_edges(holder, std::move(edges));
}

DecisionNetwork mark_unavailable(const DecisionNetwork& network, PlayerId j) {
    if (j == network.holder())
        throw ValidationError(fmt::format("holder cannot be marked unavailable (id {})", j.value()));
    std::vector<NetworkEdge> edges(network.edges().begin(), network.edges().end());
    for (auto& e : edges) {
        if (e.to == j) {
            e.vector.p = 0.0;
            e.vector.r = 0;
        }
    }
    return DecisionNetwork::from_edges(network.holder(), std::move(edges));
}

EdgeVector4 edge(const DecisionNetwork& network, PlayerId j) { return network.edge(j); }

} // namespace fournet
