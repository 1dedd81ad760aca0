#include "hans/render.hpp"

#include <algorithm>

#include <json.hpp>

namespace hans {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::vector<std::string>> sorted_family(const std::set<ConclusionSet>& family) {
    std::vector<std::vector<std::string>> rows;
    for (const ConclusionSet& cs : family) {
        std::vector<std::string> row;
        for (const Literal& l : cs.literals())
            row.push_back(l.to_string());
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

const char* to_string(ArgumentKind kind) {
    switch (kind) {
        case ArgumentKind::Context: return "context";
        case ArgumentKind::Ordinary: return "ordinary";
        case ArgumentKind::Auxiliary: return "auxiliary";
    }
    return "?";
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string argument_label(const DefeatGraph& graph, int index) {
    if (graph.expanded && index == graph.aux_index)
        return "aux";
    return "A" + std::to_string(index);
}

std::string render_json(const std::string& method, const std::set<ConclusionSet>& family) {
    ordered_json doc;
    doc["method"] = method;
    doc["extensions"] = sorted_family(family);
    return doc.dump();
}

std::string render_json(const DefeatGraph& graph) {
    ordered_json doc;
    doc["arguments"] = ordered_json::array();
    for (size_t i = 0; i < graph.arguments.size(); ++i) {
        const Argument& a = graph.arguments[i];
        ordered_json entry;
        entry["id"] = argument_label(graph, static_cast<int>(i));
        entry["kind"] = to_string(a.kind());
        std::vector<std::string> walk;
        for (const Literal& l : a.path())
            walk.push_back(l.to_string());
        entry["path"] = walk;
        doc["arguments"].push_back(std::move(entry));
    }
    auto edges = [&](const std::set<std::pair<int, int>>& set) {
        ordered_json rows = ordered_json::array();
        for (const auto& [from, to] : set)
            rows.push_back({argument_label(graph, from), argument_label(graph, to)});
        return rows;
    };
    doc["defeats"] = edges(graph.defeats);
    doc["auxiliary"] = edges(graph.auxiliary_defeats);
    return doc.dump();
}

std::string render_json(const DefeatGraph& graph, Semantics semantics,
                        const std::vector<ArgumentIndexSet>& extension_family) {
    ordered_json doc;
    doc["semantics"] = to_string(semantics);
    doc["lifting"] = to_string(graph.lifting);
    doc["extensions"] = ordered_json::array();
    for (const ArgumentIndexSet& e : extension_family) {
        std::vector<std::string> ids;
        for (int index : e)
            ids.push_back(argument_label(graph, index));
        doc["extensions"].push_back(ids);
    }
    doc["outfamily"] = sorted_family(conclusions_of(graph, extension_family));
    return doc.dump();
}

std::string render_dot(const System& system) {
    LiteralSet mentioned;
    for (const Norm& n : system.norms()) {
        mentioned.insert(n.antecedent);
        mentioned.insert(n.consequent);
    }

    std::string out = "digraph hans {\n";
    out += "  rankdir=LR;\n";
    out += "  subgraph cluster_context {\n    label=\"context\";\n    style=solid;\n";
    for (const Literal& l : system.context())
        if (!l.is_top())
            out += "    " + dot_quote(l.to_string()) + " [shape=box];\n";
    out += "  }\n";
    for (const Literal& l : mentioned)
        if (!l.is_top() && !system.context().count(l))
            out += "  " + dot_quote(l.to_string()) + " [shape=ellipse];\n";

    std::vector<Norm> norms = system.norms();
    std::sort(norms.begin(), norms.end(),
              [](const Norm& a, const Norm& b) { return a.id < b.id; });
    for (const Norm& n : norms)
        out += "  " + dot_quote(n.antecedent.to_string()) + " -> " +
               dot_quote(n.consequent.to_string()) + " [style=dashed, label=\"" +
               std::to_string(n.rank) + "\"];\n";
    return out + "}\n";
}

std::string render_dot(const DefeatGraph& graph) {
    std::string out = "digraph defeats {\n";
    for (size_t i = 0; i < graph.arguments.size(); ++i) {
        const Argument& a = graph.arguments[i];
        const std::string label = argument_label(graph, static_cast<int>(i));
        std::string text = label;
        if (!a.is_auxiliary()) {
            text += ": ";
            const std::vector<Literal> walk = a.path();
            for (size_t k = 0; k < walk.size(); ++k) {
                if (k)
                    text += ",";
                text += walk[k].to_string();
            }
        }
        out += "  " + dot_quote(label) + " [label=" + dot_quote(text) +
               (a.is_context() ? ", shape=box" : "") + "];\n";
    }
    for (const auto& [from, to] : graph.defeats) {
        const bool added = graph.auxiliary_defeats.count({from, to}) != 0;
        out += "  " + dot_quote(argument_label(graph, from)) + " -> " +
               dot_quote(argument_label(graph, to)) + (added ? " [style=dashed]" : "") + ";\n";
    }
    return out + "}\n";
}

const char* to_string(Semantics semantics) {
    switch (semantics) {
        case Semantics::Complete: return "complete";
        case Semantics::Grounded: return "grounded";
        case Semantics::Preferred: return "preferred";
        case Semantics::Stable: return "stable";
    }
    return "?";
}

const char* to_string(Lifting lifting) {
    return lifting == Lifting::WeakestLink ? "weakest" : "last";
}

}  // namespace hans
