#include "fournet/dot.hpp"

#include <fmt/format.h>

namespace fournet {

std::string export_network_dot(const DecisionNetwork& network) {
    const int holder = network.holder().value();
    std::string out = fmt::format("graph \"N({})\" {{\n", holder);
    out += "  layout=circo;\n";
    out += "  node [shape=circle, fontname=\"Helvetica\"];\n";
    out += "  edge [fontname=\"Helvetica\", fontsize=10];\n";
    for (PlayerId id : all_players()) {
        if (id.value() == holder)
            out += fmt::format("  t{0} [label=\"t{0}\", style=filled, fillcolor=\"gold\", penwidth=2];\n", id.value());
        else
            out += fmt::format("  t{0} [label=\"t{0}\"];\n", id.value());
    }
    for (const auto& e : network.edges()) {
        const auto& v = e.vector;
        out += fmt::format("  t{} -- t{} [label=\"({:.3f}, {:.3f}, {:.3f}, {})\"];\n", holder, e.to.value(), v.s,
                           v.tau, v.p, v.r);
    }
    out += "}\n";
    return out;
}

} // namespace fournet
