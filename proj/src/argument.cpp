#include "hans/argument.hpp"

#include <algorithm>
#include <limits>

#include "hans/errors.hpp"

namespace hans {

Argument Argument::context(Literal literal) {
    if (literal.is_top())
        throw PreconditionError("top does not form a context argument");
    return Argument(ArgumentKind::Context, std::move(literal), {});
}

Argument Argument::ordinary(std::vector<Norm> norms) {
    if (norms.empty())
        throw PreconditionError("an ordinary argument needs at least one norm");
    return Argument(ArgumentKind::Ordinary, Literal::top(), std::move(norms));
}

Argument Argument::auxiliary() {
    return Argument(ArgumentKind::Auxiliary, Literal::top(), {});
}

std::optional<Literal> Argument::conclusion() const {
    switch (kind_) {
        case ArgumentKind::Context: return literal_;
        case ArgumentKind::Ordinary: return norms_.back().consequent;
        case ArgumentKind::Auxiliary: return std::nullopt;
    }
    return std::nullopt;
}

const Norm& Argument::top_norm() const {
    if (!is_ordinary())
        throw PreconditionError("only ordinary arguments have a top norm");
    return norms_.back();
}

std::vector<Literal> Argument::path() const {
    std::vector<Literal> walk;
    if (is_context()) {
        walk.push_back(literal_);
    } else if (is_ordinary()) {
        walk.push_back(norms_.front().antecedent);
        for (const Norm& n : norms_)
            walk.push_back(n.consequent);
    }
    return walk;
}

bool Argument::is_sub_argument_of(const Argument& other) const {
    if (!is_ordinary() || !other.is_ordinary() || norms_.size() > other.norms_.size())
        return false;
    for (size_t i = 0; i < norms_.size(); ++i)
        if (norms_[i].id != other.norms_[i].id)
            return false;
    return true;
}

std::string Argument::to_string() const {
    if (is_auxiliary())
        return "aux";
    std::string out = "[";
    bool first = true;
    for (const Literal& l : path()) {
        if (!first)
            out += " ";
        out += l.to_string();
        first = false;
    }
    return out + "]";
}

bool Argument::operator==(const Argument& o) const {
    if (kind_ != o.kind_)
        return false;
    if (is_context())
        return literal_ == o.literal_;
    if (norms_.size() != o.norms_.size())
        return false;
    for (size_t i = 0; i < norms_.size(); ++i)
        if (norms_[i].id != o.norms_[i].id)
            return false;
    return true;
}

bool Argument::operator<(const Argument& o) const {
    if (kind_ != o.kind_)
        return static_cast<int>(kind_) < static_cast<int>(o.kind_);
    if (is_context())
        return literal_ < o.literal_;
    if (norms_.size() != o.norms_.size())
        return norms_.size() < o.norms_.size();
    for (size_t i = 0; i < norms_.size(); ++i)
        if (norms_[i].id != o.norms_[i].id)
            return norms_[i].id < o.norms_[i].id;
    return false;
}

namespace {

void grow_paths(const System& system, std::vector<Norm>& chain, LiteralSet& traversed,
                std::vector<Argument>& out) {
    const Literal tip = chain.back().consequent;
    for (const Norm& n : system.norms()) {
        if (n.antecedent != tip)
            continue;
        if (std::any_of(chain.begin(), chain.end(),
                        [&](const Norm& used) { return used.id == n.id; }))
            continue;
        const Literal& head = n.consequent;
        if (!head.is_top() && traversed.count(head.complement()))
            continue;  // the walk would become inconsistent
        chain.push_back(n);
        const bool fresh = traversed.insert(head).second;
        out.push_back(Argument::ordinary(chain));
        grow_paths(system, chain, traversed, out);
        if (fresh)
            traversed.erase(head);
        chain.pop_back();
    }
}

}  // namespace

std::vector<Argument> enumerate_arguments(const System& system) {
    std::vector<Argument> out;
    for (const Literal& c : system.context())
        if (!c.is_top())
            out.push_back(Argument::context(c));

    for (const Literal& c : system.context()) {
        for (const Norm& n : system.norms()) {
            if (n.antecedent != c)
                continue;
            LiteralSet traversed{n.antecedent};
            if (!n.consequent.is_top() && traversed.count(n.consequent.complement()))
                continue;
            std::vector<Norm> chain{n};
            traversed.insert(n.consequent);
            out.push_back(Argument::ordinary(chain));
            grow_paths(system, chain, traversed, out);
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Argument> sub_arguments(const Argument& argument) {
    std::vector<Argument> out;
    if (!argument.is_ordinary())
        return out;
    std::vector<Norm> prefix;
    for (const Norm& n : argument.norms()) {
        prefix.push_back(n);
        out.push_back(Argument::ordinary(prefix));
    }
    return out;
}

Norm weakest_norm(const Argument& argument) {
    if (!argument.is_ordinary())
        throw PreconditionError("only ordinary arguments have a weakest norm");
    const Norm* weakest = nullptr;
    bool tied = false;
    for (const Norm& n : argument.norms()) {
        if (!weakest || n.rank < weakest->rank) {
            weakest = &n;
            tied = false;
        } else if (n.rank == weakest->rank && n.id != weakest->id) {
            tied = true;
        }
    }
    if (tied)
        throw PreconditionError("weakest norm is not unique under tied ranks");
    return *weakest;
}

Argument weakest_sub_argument(const Argument& argument) {
    const Norm w = weakest_norm(argument);
    std::vector<Norm> prefix;
    for (const Norm& n : argument.norms()) {
        prefix.push_back(n);
        if (n.id == w.id)
            break;
    }
    return Argument::ordinary(std::move(prefix));
}

std::vector<Argument> warg(const Argument& argument, const std::vector<Argument>& universe) {
    const Argument wsub = weakest_sub_argument(argument);
    std::vector<Argument> out;
    for (const Argument& candidate : universe)
        if (wsub.is_sub_argument_of(candidate))
            out.push_back(candidate);
    return out;
}

namespace {

std::set<int> norm_ids(const Argument& a) {
    std::set<int> ids;
    for (const Norm& n : a.norms())
        ids.insert(n.id);
    return ids;
}

}  // namespace

bool cmp_weakest_link(const Argument& a, const Argument& b) {
    if (!a.is_ordinary() || !b.is_ordinary())
        throw PreconditionError("weakest-link comparison needs ordinary arguments");
    const std::set<int> mine = norm_ids(a);
    const std::set<int> theirs = norm_ids(b);

    int their_min = std::numeric_limits<int>::max();
    bool their_own = false;
    for (const Norm& n : b.norms())
        if (!mine.count(n.id)) {
            their_own = true;
            their_min = std::min(their_min, n.rank);
        }
    if (!their_own)
        return false;

    int my_min = std::numeric_limits<int>::max();
    for (const Norm& n : a.norms())
        if (!theirs.count(n.id))
            my_min = std::min(my_min, n.rank);
    return their_min <= my_min;
}

bool cmp_last_link(const Argument& a, const Argument& b) {
    if (!a.is_ordinary() || !b.is_ordinary())
        throw PreconditionError("last-link comparison needs ordinary arguments");
    return a.top_norm().rank >= b.top_norm().rank;
}

bool attacks(const Argument& a, const Argument& b) {
    const std::optional<Literal> concl = a.conclusion();
    if (!concl || concl->is_top())
        return false;
    const Literal want = concl->complement();
    for (const Argument& sub : sub_arguments(b))
        if (sub.conclusion() == want)
            return true;
    return false;
}

bool defeats(const Argument& a, const Argument& b, Lifting lifting, DefeatTarget target) {
    const std::optional<Literal> concl = a.conclusion();
    if (!concl || concl->is_top())
        return false;
    const Literal want = concl->complement();
    for (const Argument& sub : sub_arguments(b)) {
        if (sub.conclusion() != want)
            continue;
        if (a.is_context())
            return true;
        const Argument& against = target == DefeatTarget::AttackedSub ? sub : b;
        const bool preferred = lifting == Lifting::WeakestLink ? cmp_weakest_link(a, against)
                                                               : cmp_last_link(a, against);
        if (preferred)
            return true;
    }
    return false;
}

}  // namespace hans
