#include "hans/system.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "hans/errors.hpp"

namespace hans {

System System::make(const std::vector<NormSpec>& norms, const LiteralSet& context) {
    System sys;
    sys.context_ = context;
    sys.context_.insert(Literal::top());
    if (!is_consistent(sys.context_))
        throw ValidationError("context contains a literal together with its negation");

    std::set<std::pair<Literal, Literal>> seen;
    sys.norms_.reserve(norms.size());
    for (const NormSpec& spec : norms) {
        if (spec.rank < 0)
            throw ValidationError("norm rank must be a natural number");
        if (!seen.insert({spec.antecedent, spec.consequent}).second)
            throw ValidationError("duplicate norm " + spec.antecedent.to_string() + " -> " +
                                  spec.consequent.to_string());
        Norm n;
        n.id = static_cast<int>(sys.norms_.size());
        n.antecedent = spec.antecedent;
        n.consequent = spec.consequent;
        n.rank = spec.rank;
        sys.norms_.push_back(std::move(n));
    }

    for (const Literal& l : sys.context_)
        if (!l.is_top())
            sys.atoms_.insert(l.atom());
    for (const Norm& n : sys.norms_) {
        if (!n.antecedent.is_top())
            sys.atoms_.insert(n.antecedent.atom());
        if (!n.consequent.is_top())
            sys.atoms_.insert(n.consequent.atom());
    }
    return sys;
}

bool System::operator==(const System& o) const {
    if (atoms_ != o.atoms_ || context_ != o.context_)
        return false;
    auto key = [](const std::vector<Norm>& ns) {
        std::set<std::tuple<Literal, Literal, int>> k;
        for (const Norm& n : ns)
            k.insert({n.antecedent, n.consequent, n.rank});
        return k;
    };
    return key(norms_) == key(o.norms_);
}

std::vector<std::string> lint(const System& system) {
    std::vector<std::string> warnings;
    for (const Norm& n : system.norms())
        if (n.consequent.is_top())
            warnings.push_back("norm " + n.antecedent.to_string() +
                               " -> top can never fire or conflict");
    return warnings;
}

}  // namespace hans
