#include "hans/detachment.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hans/errors.hpp"

namespace hans {

ConclusionSet::ConclusionSet(const LiteralSet& literals) {
    for (const Literal& l : literals)
        if (!l.is_top())
            literals_.insert(l);
}

std::string ConclusionSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const Literal& l : literals_) {
        if (!first)
            out += ", ";
        out += l.to_string();
        first = false;
    }
    return out + "}";
}

std::string to_string(const std::set<ConclusionSet>& family) {
    std::string out = "{";
    bool first = true;
    for (const ConclusionSet& cs : family) {
        if (!first)
            out += ", ";
        out += cs.to_string();
        first = false;
    }
    return out + "}";
}

bool is_totally_ordered(const System& system) {
    std::set<int> ranks;
    for (const Norm& n : system.norms())
        if (!ranks.insert(n.rank).second)
            return false;
    return true;
}

LiteralSet reachable(const System& system, const NormIdSet& applied) {
    LiteralSet settled = system.context();
    LiteralSet reached;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int id : applied) {
            const Norm& n = system.norm(id);
            if (settled.count(n.antecedent) && !reached.count(n.consequent)) {
                reached.insert(n.consequent);
                settled.insert(n.consequent);
                grew = true;
            }
        }
    }
    return reached;
}

std::vector<Norm> applicable(const System& system, const NormIdSet& applied) {
    LiteralSet settled = system.context();
    for (int id : applied)
        settled.insert(system.norm(id).consequent);

    std::vector<Norm> out;
    for (const Norm& n : system.norms()) {
        if (applied.count(n.id) || !settled.count(n.antecedent))
            continue;
        if (settled.count(n.consequent))
            continue;
        if (!n.consequent.is_top() && settled.count(n.consequent.complement()))
            continue;
        out.push_back(n);
    }
    return out;
}

namespace {

void require_total_order(const System& system, const char* op) {
    if (!is_totally_ordered(system))
        throw PreconditionError(std::string(op) + " requires distinct norm ranks");
}

}  // namespace

NormIdSet greedy_norms(const System& system) {
    require_total_order(system, "greedy");
    NormIdSet applied;
    for (size_t step = 0; step <= system.norms().size(); ++step) {
        std::vector<Norm> candidates = applicable(system, applied);
        if (candidates.empty())
            break;
        const Norm* best = &candidates.front();
        for (const Norm& n : candidates)
            if (n.rank > best->rank)
                best = &n;
        applied.insert(best->id);
    }
    return applied;
}

ConclusionSet greedy(const System& system) {
    return ConclusionSet(reachable(system, greedy_norms(system)));
}

namespace {

void preorder_walk(const System& system, NormIdSet applied, std::set<NormIdSet>& visited,
                   std::set<ConclusionSet>& results) {
    if (!visited.insert(applied).second)
        return;
    std::vector<Norm> candidates = applicable(system, applied);
    if (candidates.empty()) {
        results.insert(ConclusionSet(reachable(system, applied)));
        return;
    }
    int best = candidates.front().rank;
    for (const Norm& n : candidates)
        best = std::max(best, n.rank);
    for (const Norm& n : candidates) {
        if (n.rank != best)
            continue;
        NormIdSet next = applied;
        next.insert(n.id);
        preorder_walk(system, std::move(next), visited, results);
    }
}

}  // namespace

std::set<ConclusionSet> greedy_preorder(const System& system) {
    std::set<NormIdSet> visited;
    std::set<ConclusionSet> results;
    preorder_walk(system, {}, visited, results);
    return results;
}

System reduce_system(const System& system, const LiteralSet& enabled) {
    LiteralSet settled = system.context();
    settled.insert(enabled.begin(), enabled.end());

    // One body-free norm per consequent, keeping the best contributing rank.
    std::map<Literal, int> best_rank;
    for (const Norm& n : system.norms()) {
        if (!settled.count(n.antecedent))
            continue;
        auto [it, fresh] = best_rank.insert({n.consequent, n.rank});
        if (!fresh)
            it->second = std::max(it->second, n.rank);
    }

    std::vector<NormSpec> specs;
    specs.reserve(best_rank.size());
    for (const auto& [head, rank] : best_rank)
        specs.push_back({Literal::top(), head, rank});
    std::sort(specs.begin(), specs.end(), [](const NormSpec& a, const NormSpec& b) {
        return std::tie(a.rank, a.consequent) < std::tie(b.rank, b.consequent);
    });
    return System::make(specs, system.context());
}

std::set<ConclusionSet> reduction(const System& system) {
    require_total_order(system, "reduction");

    std::vector<Literal> heads;
    {
        LiteralSet seen;
        for (const Norm& n : system.norms())
            if (!n.consequent.is_top() && seen.insert(n.consequent).second)
                heads.push_back(n.consequent);
    }
    if (heads.size() > 24)
        throw ValidationError("reduction candidate search is limited to 24 distinct heads");

    std::set<ConclusionSet> extensions;
    const size_t combos = static_cast<size_t>(1) << heads.size();
    for (size_t bits = 0; bits < combos; ++bits) {
        LiteralSet candidate;
        for (size_t i = 0; i < heads.size(); ++i)
            if (bits & (static_cast<size_t>(1) << i))
                candidate.insert(heads[i]);
        if (!is_consistent(candidate))
            continue;
        if (greedy(reduce_system(system, candidate)) == ConclusionSet(candidate))
            extensions.insert(ConclusionSet(candidate));
    }
    return extensions;
}

std::vector<Norm> max_obeyable(const System& system) {
    require_total_order(system, "optimization");

    std::vector<Norm> descending = system.norms();
    std::sort(descending.begin(), descending.end(),
              [](const Norm& a, const Norm& b) { return a.rank > b.rank; });

    NormIdSet obeyable;
    for (const Norm& n : descending) {
        NormIdSet trial = obeyable;
        trial.insert(n.id);
        LiteralSet outcome = reachable(system, trial);
        outcome.insert(system.context().begin(), system.context().end());
        if (is_consistent(outcome))
            obeyable = std::move(trial);
    }

    std::vector<Norm> out;
    for (int id : obeyable)
        out.push_back(system.norm(id));
    return out;
}

ConclusionSet optimization(const System& system) {
    NormIdSet ids;
    for (const Norm& n : max_obeyable(system))
        ids.insert(n.id);
    return ConclusionSet(reachable(system, ids));
}

}  // namespace hans
