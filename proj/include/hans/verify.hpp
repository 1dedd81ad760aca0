#ifndef HANS_VERIFY_HPP
#define HANS_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "hans/detachment.hpp"
#include "hans/system.hpp"

namespace hans {

/// One executed correspondence check: the detachment side against the
/// argumentation side, with both result families kept for reporting.
struct VerifyReport {
    std::string theorem;   // "greedy" | "reduction" | "optimization"
    std::string instance;  // canonical system text
    bool pass = false;
    std::set<ConclusionSet> detachment;     // left-hand side
    std::set<ConclusionSet> argumentation;  // right-hand side
    std::optional<std::uint64_t> seed;
    std::string note;  // set when the check could not even be stated

    /// Multi-line report: verdict first, both sides on failure.
    std::string to_string() const;
};

/// Greedy equals the stable conclusions of the weakest-link framework.
VerifyReport verify_greedy(const System& system);

/// Reduction equals the stable conclusions of the last-link framework.
VerifyReport verify_reduction(const System& system);

/// Optimization equals the ordinary conclusions of the unique stable
/// extension of the expanded weakest-link framework. A missing or
/// non-unique stable extension is reported and counts as a failure.
VerifyReport verify_optimization(const System& system);

/// Structural reasons why the three correspondences need not hold on this
/// instance, empty when there are none. The detachment procedures never
/// report a context literal and never apply a norm against an already
/// settled head, while the argumentation side accepts any undefeated
/// argument; the two views provably coincide only when every conflict is
/// visible to both. Two shapes break that: a consistent chain that ends in
/// a context literal (an undefeatable argument for something detachment
/// cannot say), and a norm whose antecedent is derivable but whose
/// consequent is not (reduction re-ranks it as body-free although no
/// argument can ever voice it).
std::vector<std::string> correspondence_caveats(const System& system);

/// A reproducible random system: distinct (antecedent, consequent) pairs
/// with no top consequents, ranks a permutation of 0..norms-1, and a
/// consistent random context containing at least one norm antecedent.
/// Draws are redrawn until correspondence_caveats is empty, so every
/// generated instance is in the domain the verify checks are sound for.
/// Throws ValidationError when the counts are infeasible (atoms > 8,
/// norms > 12, or more norms than distinct pairs).
System random_hans(int atoms, int norms, std::uint64_t seed);

/// The per-trial substream seed used by `verify` trial mode.
std::uint64_t trial_seed(std::uint64_t base_seed, int trial);

/// One trial instance for the given bounds: an atom count in
/// [1, max_atoms] (0 when max_atoms is 0), a norm count in [0, max_norms]
/// clipped to what the atom count allows, then random_hans.
System random_trial(int max_atoms, int max_norms, std::uint64_t seed);

}  // namespace hans

#endif
