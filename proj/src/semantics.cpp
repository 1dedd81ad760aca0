#include "hans/semantics.hpp"

#include <algorithm>
#include <functional>

namespace hans {

bool is_conflict_free(const DefeatGraph& graph, const ArgumentIndexSet& members) {
    for (const auto& [from, to] : graph.defeats)
        if (members.count(from) && members.count(to))
            return false;
    return true;
}

bool defends(const DefeatGraph& graph, const ArgumentIndexSet& members, int argument) {
    for (const auto& [from, to] : graph.defeats) {
        if (to != argument)
            continue;
        bool countered = false;
        for (int member : members)
            if (graph.has_defeat(member, from)) {
                countered = true;
                break;
            }
        if (!countered)
            return false;
    }
    return true;
}

namespace {

ArgumentIndexSet grounded_extension(const DefeatGraph& graph) {
    ArgumentIndexSet in;
    const int n = static_cast<int>(graph.arguments.size());
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < n; ++i)
            if (!in.count(i) && defends(graph, in, i)) {
                in.insert(i);
                grew = true;
            }
    }
    return in;
}

bool is_complete(const DefeatGraph& graph, const ArgumentIndexSet& members) {
    if (!is_conflict_free(graph, members))
        return false;
    const int n = static_cast<int>(graph.arguments.size());
    for (int i = 0; i < n; ++i) {
        const bool defended = defends(graph, members, i);
        if (members.count(i) ? !defended : defended)
            return false;
    }
    return true;
}

bool is_stable(const DefeatGraph& graph, const ArgumentIndexSet& members) {
    if (!is_conflict_free(graph, members))
        return false;
    const int n = static_cast<int>(graph.arguments.size());
    for (int i = 0; i < n; ++i) {
        if (members.count(i))
            continue;
        bool hit = false;
        for (int member : members)
            if (graph.has_defeat(member, i)) {
                hit = true;
                break;
            }
        if (!hit)
            return false;
    }
    return true;
}

// Every complete (hence stable, preferred) extension is the grounded core
// plus a conflict-free selection of arguments the grounded labelling left
// undecided. Enumerates those selections.
void enumerate_candidates(const DefeatGraph& graph, const ArgumentIndexSet& core,
                          const std::vector<int>& undecided, size_t next, ArgumentIndexSet& chosen,
                          const std::function<void(const ArgumentIndexSet&)>& emit) {
    if (next == undecided.size()) {
        ArgumentIndexSet candidate = core;
        candidate.insert(chosen.begin(), chosen.end());
        emit(candidate);
        return;
    }
    const int arg = undecided[next];
    bool clash = false;
    for (int picked : chosen)
        if (graph.has_defeat(arg, picked) || graph.has_defeat(picked, arg)) {
            clash = true;
            break;
        }
    if (!clash && !graph.has_defeat(arg, arg)) {
        chosen.insert(arg);
        enumerate_candidates(graph, core, undecided, next + 1, chosen, emit);
        chosen.erase(arg);
    }
    enumerate_candidates(graph, core, undecided, next + 1, chosen, emit);
}

std::vector<ArgumentIndexSet> search_above_core(const DefeatGraph& graph,
                                                const std::function<bool(const ArgumentIndexSet&)>& accept) {
    const ArgumentIndexSet core = grounded_extension(graph);
    ArgumentIndexSet ruled_out;
    for (const auto& [from, to] : graph.defeats)
        if (core.count(from))
            ruled_out.insert(to);

    std::vector<int> undecided;
    for (int i = 0; i < static_cast<int>(graph.arguments.size()); ++i)
        if (!core.count(i) && !ruled_out.count(i))
            undecided.push_back(i);

    std::vector<ArgumentIndexSet> found;
    ArgumentIndexSet chosen;
    enumerate_candidates(graph, core, undecided, 0, chosen,
                         [&](const ArgumentIndexSet& candidate) {
                             if (accept(candidate))
                                 found.push_back(candidate);
                         });
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace

std::vector<ArgumentIndexSet> extensions(const DefeatGraph& graph, Semantics semantics) {
    if (semantics == Semantics::Grounded)
        return {grounded_extension(graph)};

    if (semantics == Semantics::Stable)
        return search_above_core(graph, [&](const ArgumentIndexSet& c) { return is_stable(graph, c); });

    std::vector<ArgumentIndexSet> complete =
        search_above_core(graph, [&](const ArgumentIndexSet& c) { return is_complete(graph, c); });
    if (semantics == Semantics::Complete)
        return complete;

    // Preferred: inclusion-maximal complete extensions.
    std::vector<ArgumentIndexSet> preferred;
    for (const ArgumentIndexSet& e : complete) {
        bool maximal = true;
        for (const ArgumentIndexSet& other : complete)
            if (other != e && std::includes(other.begin(), other.end(), e.begin(), e.end())) {
                maximal = false;
                break;
            }
        if (maximal)
            preferred.push_back(e);
    }
    return preferred;
}

std::set<ConclusionSet> conclusions_of(const DefeatGraph& graph,
                                       const std::vector<ArgumentIndexSet>& extension_family) {
    std::set<ConclusionSet> family;
    for (const ArgumentIndexSet& e : extension_family) {
        LiteralSet literals;
        for (int index : e) {
            const Argument& a = graph.argument(index);
            if (a.is_ordinary())
                literals.insert(*a.conclusion());
        }
        family.insert(ConclusionSet(literals));
    }
    return family;
}

std::set<ConclusionSet> outfamily(const DefeatGraph& graph, Semantics semantics) {
    return conclusions_of(graph, extensions(graph, semantics));
}

bool is_acyclic(const DefeatGraph& graph) {
    const int n = static_cast<int>(graph.arguments.size());
    std::vector<int> state(static_cast<size_t>(n), 0);  // 0 fresh, 1 on stack, 2 done

    std::function<bool(int)> visit = [&](int node) {
        state[static_cast<size_t>(node)] = 1;
        for (const auto& [from, to] : graph.defeats) {
            if (from != node)
                continue;
            if (state[static_cast<size_t>(to)] == 1)
                return false;
            if (state[static_cast<size_t>(to)] == 0 && !visit(to))
                return false;
        }
        state[static_cast<size_t>(node)] = 2;
        return true;
    };

    for (int i = 0; i < n; ++i)
        if (state[static_cast<size_t>(i)] == 0 && !visit(i))
            return false;
    return true;
}

}  // namespace hans
