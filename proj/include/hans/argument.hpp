#ifndef HANS_ARGUMENT_HPP
#define HANS_ARGUMENT_HPP

#include <optional>
#include <vector>

#include "hans/system.hpp"

namespace hans {

enum class ArgumentKind { Context, Ordinary, Auxiliary };

/// An argument over a normative system: a bare context literal, a
/// consistent context-rooted chain of distinct norms, or the single
/// synthetic auxiliary argument of an expanded framework.
class Argument {
public:
    static Argument context(Literal literal);
    static Argument ordinary(std::vector<Norm> norms);
    static Argument auxiliary();

    ArgumentKind kind() const { return kind_; }
    bool is_context() const { return kind_ == ArgumentKind::Context; }
    bool is_ordinary() const { return kind_ == ArgumentKind::Ordinary; }
    bool is_auxiliary() const { return kind_ == ArgumentKind::Auxiliary; }

    /// The context literal, or the consequent of the last norm. The
    /// auxiliary argument concludes nothing.
    std::optional<Literal> conclusion() const;

    /// Ordinary arguments only; empty otherwise.
    const std::vector<Norm>& norms() const { return norms_; }
    const Norm& top_norm() const;

    /// The literal walk, e.g. [w, h, o] for the chain w -> h -> o. A
    /// context argument walks its single literal; auxiliary walks nothing.
    std::vector<Literal> path() const;

    /// True iff this argument is a sub-argument of other (a prefix of its
    /// norm chain; every ordinary argument is a sub-argument of itself).
    bool is_sub_argument_of(const Argument& other) const;

    std::string to_string() const;

    bool operator==(const Argument& o) const;
    bool operator!=(const Argument& o) const { return !(*this == o); }
    /// Canonical order: context arguments lexicographically, then ordinary
    /// by length then norm-id sequence, then the auxiliary argument.
    bool operator<(const Argument& o) const;

private:
    Argument(ArgumentKind kind, Literal literal, std::vector<Norm> norms)
        : kind_(kind), literal_(std::move(literal)), norms_(std::move(norms)) {}

    ArgumentKind kind_;
    Literal literal_;
    std::vector<Norm> norms_;
};

/// All arguments of a system in canonical order: one context argument per
/// non-top context literal, and every consistent context-rooted norm
/// chain. Closed under sub-arguments by construction.
std::vector<Argument> enumerate_arguments(const System& system);

/// The prefixes [u1..ui] of an ordinary argument, shortest first and the
/// argument itself last; empty for context and auxiliary arguments.
std::vector<Argument> sub_arguments(const Argument& argument);

/// The unique minimum-rank norm of an ordinary argument. Throws on context
/// or auxiliary arguments and on rank ties.
Norm weakest_norm(const Argument& argument);

/// The prefix whose top norm is the weakest norm.
Argument weakest_sub_argument(const Argument& argument);

/// warg: every argument in the universe that has the weakest sub-argument
/// of this argument as a prefix (the argument itself included).
std::vector<Argument> warg(const Argument& argument, const std::vector<Argument>& universe);

/// Weakest-link preference: a is at least as preferred as b iff some norm
/// of b outside a ranks no higher than every norm of a outside b.
bool cmp_weakest_link(const Argument& a, const Argument& b);

/// Last-link preference: the top norm of a ranks at least as high as the
/// top norm of b.
bool cmp_last_link(const Argument& a, const Argument& b);

/// True iff some sub-argument of b concludes the complement of a's
/// conclusion.
bool attacks(const Argument& a, const Argument& b);

enum class Lifting { WeakestLink, LastLink };

/// Which argument the attacker is compared against when turning an attack
/// into a defeat: the attacked sub-argument (default, and the reading the
/// closure properties need) or the whole attacked argument.
enum class DefeatTarget { AttackedSub, WholeArgument };

/// Preference-aware attack: a context argument always defeats; an ordinary
/// argument defeats when it is at least as preferred under the lifting.
bool defeats(const Argument& a, const Argument& b, Lifting lifting,
             DefeatTarget target = DefeatTarget::AttackedSub);

}  // namespace hans

#endif
