#ifndef HANS_DETACHMENT_HPP
#define HANS_DETACHMENT_HPP

#include <set>
#include <string>
#include <vector>

#include "hans/system.hpp"

namespace hans {

/// A set of detached literals. Never stores top: top is trivially settled
/// and is not reported as a conclusion.
class ConclusionSet {
public:
    ConclusionSet() = default;
    explicit ConclusionSet(const LiteralSet& literals);

    const LiteralSet& literals() const { return literals_; }
    bool empty() const { return literals_.empty(); }
    bool consistent() const { return is_consistent(literals_); }

    /// "{a, ~b}"; literals in lexicographic order.
    std::string to_string() const;

    bool operator==(const ConclusionSet& o) const { return literals_ == o.literals_; }
    bool operator!=(const ConclusionSet& o) const { return !(*this == o); }
    bool operator<(const ConclusionSet& o) const { return literals_ < o.literals_; }

private:
    LiteralSet literals_;
};

std::string to_string(const std::set<ConclusionSet>& family);

using NormIdSet = std::set<int>;

/// True iff the rank function is injective on the norm set, which for
/// finite systems with numeric ranks is exactly an antisymmetric,
/// transitive, total priority order.
bool is_totally_ordered(const System& system);

/// R(C): every literal reachable from the context along norms of R chained
/// head to tail. Monotone in R.
LiteralSet reachable(const System& system, const NormIdSet& applied);

/// Appl(N, C, R): the norms outside R whose antecedent is already settled
/// and whose consequent is still free, i.e. neither the consequent nor its
/// complement occurs in C or the heads of R. Sorted by id.
std::vector<Norm> applicable(const System& system, const NormIdSet& applied);

/// The fixpoint of the greedy construction: repeatedly apply the
/// highest-ranked applicable norm. Requires a total order.
NormIdSet greedy_norms(const System& system);

/// Greedy detachment: the conclusions reachable via greedy_norms.
ConclusionSet greedy(const System& system);

/// Greedy extended to rank ties by branching on every maximal applicable
/// norm; the union of the extensions of all tie resolutions. Equals
/// {greedy(system)} whenever the system is totally ordered.
std::set<ConclusionSet> greedy_preorder(const System& system);

/// The body-free system: one norm (top, x) per consequent x of a norm
/// whose antecedent lies in the context or in enabled, ranked by the
/// maximum over the contributing norms.
System reduce_system(const System& system, const LiteralSet& enabled);

/// All fixpoints U = greedy(reduce_system(system, U)). Candidates range
/// over the consistent subsets of the norm heads; may be empty, a
/// singleton, or multiple sets.
std::set<ConclusionSet> reduction(const System& system);

/// The maximal obeyable set: norms admitted in descending rank order while
/// the context stays consistent with everything they reach. Sorted by id.
std::vector<Norm> max_obeyable(const System& system);

/// Optimization detachment: what the maximal obeyable set reaches.
ConclusionSet optimization(const System& system);

}  // namespace hans

#endif
