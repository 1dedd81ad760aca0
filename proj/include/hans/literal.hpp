#ifndef HANS_LITERAL_HPP
#define HANS_LITERAL_HPP

#include <set>
#include <string>
#include <string_view>

namespace hans {

/// A literal: an atom, a negated atom, or the distinguished top element.
/// Literals order and compare by their rendered form ("a" < "top" < "~a"),
/// which keeps every serialized collection lexicographic.
class Literal {
public:
    static Literal top() { return Literal(true, false, {}); }
    static Literal positive(std::string atom) { return Literal(false, false, std::move(atom)); }
    static Literal negative(std::string atom) { return Literal(false, true, std::move(atom)); }

    bool is_top() const { return top_; }
    bool is_negative() const { return negated_; }
    /// Atom identifier; empty for top.
    const std::string& atom() const { return atom_; }

    /// The bar operation: ~a for an atom a, a for ~a. Top has no complement.
    Literal complement() const;

    /// "x", "~x", or "top".
    std::string to_string() const;

    bool operator==(const Literal& o) const {
        return top_ == o.top_ && negated_ == o.negated_ && atom_ == o.atom_;
    }
    bool operator!=(const Literal& o) const { return !(*this == o); }
    bool operator<(const Literal& o) const { return to_string() < o.to_string(); }

private:
    Literal(bool top, bool negated, std::string atom)
        : top_(top), negated_(negated), atom_(std::move(atom)) {}

    bool top_;
    bool negated_;
    std::string atom_;
};

using LiteralSet = std::set<Literal>;

/// True iff no atom occurs together with its negation. Top never causes
/// inconsistency.
bool is_consistent(const LiteralSet& literals);

/// True for [A-Za-z_][A-Za-z0-9_]* that is not the reserved word "top".
bool is_valid_atom(std::string_view name);

}  // namespace hans

#endif
