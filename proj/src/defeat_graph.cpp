#include "hans/defeat_graph.hpp"

#include <algorithm>

#include "hans/detachment.hpp"
#include "hans/errors.hpp"

namespace hans {

int DefeatGraph::index_of(const Argument& a) const {
    for (size_t i = 0; i < arguments.size(); ++i)
        if (arguments[i] == a)
            return static_cast<int>(i);
    throw PreconditionError("argument is not part of this graph: " + a.to_string());
}

DefeatGraph make_defeat_graph(const System& system, Lifting lifting, DefeatTarget target) {
    DefeatGraph graph;
    graph.lifting = lifting;
    graph.arguments = enumerate_arguments(system);
    const int n = static_cast<int>(graph.arguments.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && defeats(graph.arguments[i], graph.arguments[j], lifting, target))
                graph.defeats.insert({i, j});
    return graph;
}

DefeatGraph build_af(const System& system, Lifting lifting, DefeatTarget target) {
    if (!is_totally_ordered(system))
        throw PreconditionError("building a framework requires distinct norm ranks");
    return make_defeat_graph(system, lifting, target);
}

DefeatGraph expand_af(const DefeatGraph& graph) {
    if (graph.lifting != Lifting::WeakestLink)
        throw PreconditionError("only weakest-link graphs can be expanded");
    if (graph.expanded)
        throw PreconditionError("graph is already expanded");

    DefeatGraph out = graph;
    out.expanded = true;
    out.aux_index = static_cast<int>(out.arguments.size());
    out.arguments.push_back(Argument::auxiliary());

    for (const auto& [from, to] : graph.defeats) {
        const Argument& attacker = graph.arguments[static_cast<size_t>(from)];
        const Argument& victim = graph.arguments[static_cast<size_t>(to)];
        if (!victim.is_ordinary())
            continue;

        std::vector<Argument> weakest_args = warg(victim, graph.arguments);
        const bool attacker_inside =
            std::find(weakest_args.begin(), weakest_args.end(), attacker) != weakest_args.end();

        for (const Argument& target : weakest_args) {
            std::pair<int, int> edge;
            if (attacker_inside) {
                edge = {out.aux_index, graph.index_of(target)};
            } else {
                if (!(target != victim && target.is_sub_argument_of(victim)))
                    continue;  // only proper sub-arguments gain new attackers
                edge = {from, graph.index_of(target)};
            }
            if (out.defeats.insert(edge).second)
                out.auxiliary_defeats.insert(edge);
        }
    }
    return out;
}

}  // namespace hans
