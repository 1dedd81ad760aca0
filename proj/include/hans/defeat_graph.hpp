#ifndef HANS_DEFEAT_GRAPH_HPP
#define HANS_DEFEAT_GRAPH_HPP

#include <set>
#include <utility>
#include <vector>

#include "hans/argument.hpp"

namespace hans {

/// An argumentation framework over a normative system: the canonical
/// argument list plus directed defeat edges (index pairs). An expanded
/// graph additionally holds the auxiliary argument (always the last index)
/// and remembers which edges the expansion added.
struct DefeatGraph {
    std::vector<Argument> arguments;
    std::set<std::pair<int, int>> defeats;
    Lifting lifting = Lifting::WeakestLink;
    bool expanded = false;
    int aux_index = -1;
    /// Edges added by expand_af that were not already defeats; rendered
    /// dashed.
    std::set<std::pair<int, int>> auxiliary_defeats;

    const Argument& argument(int index) const {
        return arguments.at(static_cast<size_t>(index));
    }
    int index_of(const Argument& a) const;
    bool has_defeat(int from, int to) const { return defeats.count({from, to}) != 0; }
};

/// The framework over all arguments of the system with every defeat under
/// the chosen lifting. No total-order requirement; preference comparisons
/// are rank-based and tolerate ties.
DefeatGraph make_defeat_graph(const System& system, Lifting lifting,
                              DefeatTarget target = DefeatTarget::AttackedSub);

/// make_defeat_graph gated on a totally ordered system, matching the
/// setting in which the detachment correspondences hold.
DefeatGraph build_af(const System& system, Lifting lifting,
                     DefeatTarget target = DefeatTarget::AttackedSub);

/// Adds the auxiliary argument and the extra defeats that reject every
/// argument whose weakest norm falls outside the maximal obeyable set:
/// for each defeat (a, b) with a outside warg(b), edges from a to
/// warg(b) ∩ psub(b); for each defeat with a inside warg(b), edges from
/// aux to all of warg(b). Requires a weakest-link graph that is not
/// already expanded.
DefeatGraph expand_af(const DefeatGraph& graph);

}  // namespace hans

#endif
