#include "hans/literal.hpp"

#include <cctype>

#include "hans/errors.hpp"

namespace hans {

Literal Literal::complement() const {
    if (top_)
        throw PreconditionError("top has no complement");
    return negated_ ? positive(atom_) : negative(atom_);
}

std::string Literal::to_string() const {
    if (top_)
        return "top";
    return negated_ ? "~" + atom_ : atom_;
}

bool is_consistent(const LiteralSet& literals) {
    for (const Literal& l : literals) {
        if (l.is_top() || l.is_negative())
            continue;
        if (literals.count(l.complement()))
            return false;
    }
    return true;
}

bool is_valid_atom(std::string_view name) {
    if (name.empty() || name == "top")
        return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
        return false;
    for (char c : name.substr(1))
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

}  // namespace hans
