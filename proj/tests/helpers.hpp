#ifndef HANS_TESTS_HELPERS_HPP
#define HANS_TESTS_HELPERS_HPP

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hans/defeat_graph.hpp"
#include "hans/detachment.hpp"
#include "hans/system.hpp"

namespace hanstest {

using namespace hans;

// --- literal / set shorthand -----------------------------------------------

inline Literal lit(const std::string& text) {
    if (text == "top")
        return Literal::top();
    if (!text.empty() && text[0] == '~')
        return Literal::negative(text.substr(1));
    return Literal::positive(text);
}

inline LiteralSet lits(const std::vector<std::string>& names) {
    LiteralSet out;
    for (const std::string& n : names)
        out.insert(lit(n));
    return out;
}

inline ConclusionSet concl(const std::vector<std::string>& names) {
    return ConclusionSet(lits(names));
}

inline std::set<ConclusionSet> family(const std::vector<std::vector<std::string>>& rows) {
    std::set<ConclusionSet> out;
    for (const auto& row : rows)
        out.insert(concl(row));
    return out;
}

// --- fixtures ----------------------------------------------------------------

inline System make_order() {
    return System::make({{lit("w"), lit("h"), 1}, {lit("h"), lit("o"), 3}, {lit("w"), lit("~o"), 2}},
                        lits({"w"}));
}

inline System make_revised_order() {
    return System::make({{lit("w"), lit("h"), 1},
                         {lit("w"), lit("~h"), 0},
                         {lit("h"), lit("o"), 3},
                         {lit("~h"), lit("o"), 4},
                         {lit("w"), lit("~o"), 2}},
                        lits({"w"}));
}

inline System make_two_reductions() {
    return System::make({{lit("a"), lit("b"), 1},
                         {lit("a"), lit("~b"), 2},
                         {lit("b"), lit("c"), 3},
                         {lit("c"), lit("b"), 4}},
                        lits({"a"}));
}

inline System make_no_stable() {
    return System::make({{lit("c"), lit("d"), 5},
                         {lit("p"), lit("~d"), 4},
                         {lit("z"), lit("~c"), 6},
                         {lit("~d"), lit("~z"), 2},
                         {lit("r"), lit("z"), 1},
                         {lit("b"), lit("c"), 0}},
                        lits({"b", "r", "p"}));
}

inline System make_empty_optimization() {
    return System::make({{lit("a"), lit("b"), 1}, {lit("b"), lit("c"), 2}, {lit("b"), lit("~c"), 3}},
                        lits({"a"}));
}

inline System make_tied_ranks() {
    return System::make({{lit("a"), lit("b"), 1},
                         {lit("a"), lit("c"), 1},
                         {lit("b"), lit("~c"), 2},
                         {lit("c"), lit("~b"), 2}},
                        lits({"a"}));
}

inline std::vector<System> totally_ordered_fixtures() {
    return {make_order(), make_revised_order(), make_two_reductions(), make_no_stable(),
            make_empty_optimization()};
}

inline std::vector<System> all_fixtures() {
    auto out = totally_ordered_fixtures();
    out.push_back(make_tied_ranks());
    return out;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(HANS_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// --- argument lookup ----------------------------------------------------------

/// Finds the argument printed as e.g. "[w h o]" or "[w]"; context arguments
/// match only when kind matches.
inline int arg_index(const DefeatGraph& graph, const std::string& printed,
                     ArgumentKind kind = ArgumentKind::Ordinary) {
    for (size_t i = 0; i < graph.arguments.size(); ++i)
        if (graph.arguments[i].kind() == kind && graph.arguments[i].to_string() == printed)
            return static_cast<int>(i);
    return -1;
}

inline std::set<std::pair<int, int>> edge_set(const DefeatGraph& graph,
                                              const std::vector<std::pair<std::string, std::string>>& edges,
                                              ArgumentKind from_kind = ArgumentKind::Ordinary,
                                              ArgumentKind to_kind = ArgumentKind::Ordinary) {
    std::set<std::pair<int, int>> out;
    for (const auto& [from, to] : edges)
        out.insert({arg_index(graph, from, from_kind), arg_index(graph, to, to_kind)});
    return out;
}

// --- independent oracles -------------------------------------------------------
//
// These re-derive results by direct enumeration and never call the code
// paths they are used to check.

/// Endpoint set of every norm-distinct head-to-tail chain rooted in the
/// context, found by exhaustive sequence enumeration.
inline LiteralSet oracle_reachable(const System& system, const std::set<int>& applied) {
    LiteralSet endpoints;
    std::vector<int> chain;

    std::function<void(const Literal&)> extend = [&](const Literal& tip) {
        for (int id : applied) {
            const Norm& n = system.norm(id);
            if (n.antecedent != tip)
                continue;
            if (std::find(chain.begin(), chain.end(), id) != chain.end())
                continue;
            chain.push_back(id);
            endpoints.insert(n.consequent);
            extend(n.consequent);
            chain.pop_back();
        }
    };

    for (const Literal& c : system.context())
        extend(c);
    return endpoints;
}

/// Literal transcription of the greedy construction, built on the oracle
/// primitives only.
inline ConclusionSet oracle_greedy(const System& system) {
    std::set<int> applied;
    while (true) {
        LiteralSet settled = system.context();
        for (int id : applied)
            settled.insert(system.norm(id).consequent);

        const Norm* best = nullptr;
        for (const Norm& n : system.norms()) {
            if (applied.count(n.id) || !settled.count(n.antecedent))
                continue;
            bool blocked = settled.count(n.consequent) != 0;
            if (!n.consequent.is_top())
                blocked = blocked || settled.count(n.consequent.complement()) != 0;
            if (blocked)
                continue;
            if (!best || n.rank > best->rank)
                best = &n;
        }
        if (!best)
            break;
        applied.insert(best->id);
    }
    return ConclusionSet(oracle_reachable(system, applied));
}

/// All-subsets semantics oracle; graphs must stay small (< 20 arguments).
struct BruteExtensions {
    std::vector<std::set<int>> complete;
    std::vector<std::set<int>> stable;
    std::vector<std::set<int>> preferred;
    std::set<int> grounded;
};

inline BruteExtensions brute_extensions(const DefeatGraph& graph) {
    const int n = static_cast<int>(graph.arguments.size());
    BruteExtensions out;

    auto conflict_free = [&](unsigned long mask) {
        for (const auto& [from, to] : graph.defeats)
            if ((mask >> from & 1u) && (mask >> to & 1u))
                return false;
        return true;
    };
    auto defended = [&](unsigned long mask, int arg) {
        for (const auto& [from, to] : graph.defeats) {
            if (to != arg)
                continue;
            bool countered = false;
            for (const auto& [f2, t2] : graph.defeats)
                if (t2 == from && (mask >> f2 & 1u)) {
                    countered = true;
                    break;
                }
            if (!countered)
                return false;
        }
        return true;
    };

    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (!conflict_free(mask))
            continue;
        bool complete = true;
        for (int i = 0; i < n && complete; ++i) {
            const bool in = (mask >> i & 1u) != 0;
            if (in != defended(mask, i))
                complete = false;
        }
        bool stable = true;
        for (int i = 0; i < n && stable; ++i) {
            if (mask >> i & 1u)
                continue;
            bool hit = false;
            for (const auto& [from, to] : graph.defeats)
                if (to == i && (mask >> from & 1u)) {
                    hit = true;
                    break;
                }
            if (!hit)
                stable = false;
        }
        std::set<int> members;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u)
                members.insert(i);
        if (complete)
            out.complete.push_back(members);
        if (stable)
            out.stable.push_back(members);
    }

    for (const auto& e : out.complete) {
        bool minimal = true;
        bool maximal = true;
        for (const auto& other : out.complete) {
            if (other == e)
                continue;
            if (std::includes(e.begin(), e.end(), other.begin(), other.end()))
                minimal = false;
            if (std::includes(other.begin(), other.end(), e.begin(), e.end()))
                maximal = false;
        }
        if (minimal)
            out.grounded = e;
        if (maximal)
            out.preferred.push_back(e);
    }
    return out;
}

}  // namespace hanstest

#endif
