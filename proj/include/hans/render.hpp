#ifndef HANS_RENDER_HPP
#define HANS_RENDER_HPP

#include <set>
#include <string>
#include <vector>

#include "hans/defeat_graph.hpp"
#include "hans/detachment.hpp"
#include "hans/semantics.hpp"

namespace hans {

/// Stable argument label: "A0", "A1", ... in canonical order, "aux" for
/// the auxiliary argument.
std::string argument_label(const DefeatGraph& graph, int index);

/// {"method": <method>, "extensions": [[sorted literal strings]...]};
/// extension arrays sorted lexicographically. Byte-identical across runs.
std::string render_json(const std::string& method, const std::set<ConclusionSet>& family);

/// {"arguments": [{"id", "kind", "path"}...], "defeats": [[from, to]...],
/// "auxiliary": [[from, to]...]}.
std::string render_json(const DefeatGraph& graph);

/// {"semantics", "lifting", "extensions": [[argument ids]...],
/// "outfamily": [[literal strings]...]}.
std::string render_json(const DefeatGraph& graph, Semantics semantics,
                        const std::vector<ArgumentIndexSet>& extension_family);

/// DOT digraph of the system: one node per mentioned literal, context
/// nodes boxed in a cluster, one rank-labelled dashed edge per norm.
std::string render_dot(const System& system);

/// DOT digraph of the framework: one node per argument labelled with its
/// path; defeats solid, expansion-added defeats dashed.
std::string render_dot(const DefeatGraph& graph);

const char* to_string(Semantics semantics);
const char* to_string(Lifting lifting);

}  // namespace hans

#endif
