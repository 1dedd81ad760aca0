#ifndef HANS_SYSTEM_HPP
#define HANS_SYSTEM_HPP

#include <string>
#include <utility>
#include <vector>

#include "hans/literal.hpp"
#include "hans/norm.hpp"

namespace hans {

/// One norm as supplied to System::make, before ids are assigned.
struct NormSpec {
    Literal antecedent;
    Literal consequent;
    int rank = 0;
};

/// A hierarchical abstract normative system: a finite universe of literals,
/// a set of ranked norms over it, and a consistent context that always
/// contains top. Immutable once built.
class System {
public:
    /// Validates and builds. Throws ValidationError on duplicate
    /// (antecedent, consequent) pairs, negative ranks, or an inconsistent
    /// context. Top is added to the context implicitly; the atom set is
    /// derived from the literals mentioned.
    static System make(const std::vector<NormSpec>& norms, const LiteralSet& context);

    const std::vector<Norm>& norms() const { return norms_; }
    const Norm& norm(int id) const { return norms_.at(static_cast<size_t>(id)); }
    const LiteralSet& context() const { return context_; }
    const std::set<std::string>& atoms() const { return atoms_; }

    /// Structural equality: same atoms, context, and (antecedent,
    /// consequent, rank) triples; norm ids are ignored.
    bool operator==(const System& o) const;
    bool operator!=(const System& o) const { return !(*this == o); }

private:
    std::vector<Norm> norms_;
    LiteralSet context_;
    std::set<std::string> atoms_;
};

/// Advisory findings that are legal but never useful, currently only norms
/// whose consequent is top (they can never conflict nor fire).
std::vector<std::string> lint(const System& system);

}  // namespace hans

#endif
