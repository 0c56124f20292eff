#pragma once

#include "fournet/network.hpp"

#include <string>

namespace fournet {

// Graphviz rendering of a 4-network: one node per player with the holder
// highlighted, each edge labelled "(s, tau, p, r)" to three decimals.
// Output depends only on the network's values.
std::string export_network_dot(const DecisionNetwork& network);

} // namespace fournet
