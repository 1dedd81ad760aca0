#ifndef HANS_SEMANTICS_HPP
#define HANS_SEMANTICS_HPP

#include "hans/defeat_graph.hpp"
#include "hans/detachment.hpp"

namespace hans {

enum class Semantics { Complete, Grounded, Preferred, Stable };

/// A set of argument indices into one graph.
using ArgumentIndexSet = std::set<int>;

bool is_conflict_free(const DefeatGraph& graph, const ArgumentIndexSet& members);

/// True iff every defeater of the argument is defeated by some member.
bool defends(const DefeatGraph& graph, const ArgumentIndexSet& members, int argument);

/// All extensions under the chosen semantics, sorted by member list.
/// Grounded is the least fixpoint of the defense operator; the others are
/// found by candidate search above the grounded core with conflict-free
/// pruning, each candidate checked against the plain definition.
std::vector<ArgumentIndexSet> extensions(const DefeatGraph& graph, Semantics semantics);

/// The conclusion family: per extension, the conclusions of its ordinary
/// arguments; identical conclusion sets are merged.
std::set<ConclusionSet> outfamily(const DefeatGraph& graph, Semantics semantics);

std::set<ConclusionSet> conclusions_of(const DefeatGraph& graph,
                                       const std::vector<ArgumentIndexSet>& extension_family);

/// True iff the defeat relation has no directed cycle. An acyclic graph
/// has one extension, shared by all four semantics.
bool is_acyclic(const DefeatGraph& graph);

}  // namespace hans

#endif
