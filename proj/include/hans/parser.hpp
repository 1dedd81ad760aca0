#ifndef HANS_PARSER_HPP
#define HANS_PARSER_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hans/system.hpp"

namespace hans {

struct SourceSpan {
    int line = 0;
    int col = 0;
};

/// A parsed .hans file together with source positions for diagnostics.
struct HansDocument {
    std::string source_name;
    System system;
    std::vector<std::string> warnings;
    std::map<int, SourceSpan> norm_spans;  // norm id -> span of its line
};

/// Parses the .hans format:
///
///   context <lit>[, <lit>...]
///   norm <lit> -> <lit> rank <nat>
///
/// with '#' comments and blank lines. A literal is an optionally ~-negated
/// identifier ([A-Za-z_][A-Za-z0-9_]*) or the reserved word top. Top is in
/// the context implicitly. Throws ParseError on bad syntax and
/// ValidationError on duplicate norms, an inconsistent context, or a
/// negative rank.
HansDocument parse_hans(std::string_view text, std::string source_name = "<input>");

/// Canonical .hans text: one sorted context line (omitted when the context
/// is only top), then norms sorted by rank. parse_hans inverts it.
std::string render_hans(const System& system);

}  // namespace hans

#endif
