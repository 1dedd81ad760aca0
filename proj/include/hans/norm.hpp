#ifndef HANS_NORM_HPP
#define HANS_NORM_HPP

#include "hans/literal.hpp"

namespace hans {

/// A regulative norm (antecedent, consequent) with its priority rank.
/// Higher rank means higher priority. The id is the declaration index
/// within the owning system and identifies the norm everywhere else.
struct Norm {
    int id = -1;
    Literal antecedent = Literal::top();
    Literal consequent = Literal::top();
    int rank = 0;

    bool operator==(const Norm& o) const {
        return id == o.id && antecedent == o.antecedent && consequent == o.consequent &&
               rank == o.rank;
    }
    bool operator!=(const Norm& o) const { return !(*this == o); }
};

}  // namespace hans

#endif
