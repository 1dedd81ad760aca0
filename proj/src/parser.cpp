#include "hans/parser.hpp"

#include <algorithm>
#include <cctype>

#include "hans/errors.hpp"

namespace hans {

namespace {

struct Token {
    std::string text;
    int col = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, int line_no) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const size_t start = i;
        if (c == ',' || c == '~') {
            ++i;
        } else if (c == '-') {
            // "->" or a (rejected later) negative number
            ++i;
            while (i < line.size() && (line[i] == '>' || std::isdigit(static_cast<unsigned char>(line[i]))))
                ++i;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            while (i < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
                ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line_no,
                             static_cast<int>(start) + 1);
        }
        tokens.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return tokens;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, int line_no)
        : tokens_(std::move(tokens)), line_(line_no) {}

    bool done() const { return pos_ >= tokens_.size(); }

    const Token& peek() const {
        static const Token end{"", 0};
        return done() ? end : tokens_[pos_];
    }

    Token take(const char* what) {
        if (done())
            throw ParseError(std::string("expected ") + what + " before end of line", line_,
                             end_col());
        return tokens_[pos_++];
    }

    void expect(std::string_view text, const char* what) {
        const Token t = take(what);
        if (t.text != text)
            throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'", line_,
                             t.col);
    }

    Literal literal() {
        Token t = take("a literal");
        bool negated = false;
        if (t.text == "~") {
            negated = true;
            t = take("an identifier after '~'");
        }
        if (t.text == "top") {
            if (negated)
                throw ParseError("top cannot be negated", line_, t.col);
            return Literal::top();
        }
        if (!is_valid_atom(t.text))
            throw ParseError("invalid identifier '" + t.text + "'", line_, t.col);
        return negated ? Literal::negative(t.text) : Literal::positive(t.text);
    }

    int rank() {
        const Token t = take("a rank");
        if (t.text.size() > 1 && t.text[0] == '-' &&
            std::all_of(t.text.begin() + 1, t.text.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ValidationError("rank must not be negative", line_, t.col);
        if (t.text.empty() ||
            !std::all_of(t.text.begin(), t.text.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("expected a natural number, got '" + t.text + "'", line_, t.col);
        if (t.text.size() > 9)
            throw ValidationError("rank is unreasonably large", line_, t.col);
        return std::stoi(t.text);
    }

    void finish() {
        if (!done())
            throw ParseError("trailing input '" + peek().text + "'", line_, peek().col);
    }

    int line() const { return line_; }

private:
    int end_col() const {
        if (tokens_.empty())
            return 1;
        return tokens_.back().col + static_cast<int>(tokens_.back().text.size());
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    int line_;
};

}  // namespace

HansDocument parse_hans(std::string_view text, std::string source_name) {
    LiteralSet context;
    std::map<std::pair<Literal, Literal>, SourceSpan> norm_lines;
    std::vector<NormSpec> norms;
    std::vector<SourceSpan> spans;

    int line_no = 0;
    size_t begin = 0;
    while (begin <= text.size()) {
        const size_t end = std::min(text.find('\n', begin), text.size());
        const std::string_view line = text.substr(begin, end - begin);
        ++line_no;

        LineParser p(tokenize(line, line_no), line_no);
        if (!p.done()) {
            const Token head = p.take("a directive");
            if (head.text == "context") {
                context.insert(p.literal());
                while (!p.done()) {
                    p.expect(",", "','");
                    context.insert(p.literal());
                }
                if (!is_consistent(context))
                    throw ValidationError("context contains a literal together with its negation",
                                          line_no, head.col);
            } else if (head.text == "norm") {
                const Literal body = p.literal();
                p.expect("->", "'->'");
                const Literal consequent = p.literal();
                p.expect("rank", "'rank'");
                const int rank = p.rank();
                p.finish();
                const SourceSpan span{line_no, head.col};
                if (!norm_lines.insert({{body, consequent}, span}).second)
                    throw ValidationError("duplicate norm " + body.to_string() + " -> " +
                                              consequent.to_string(),
                                          line_no, head.col);
                norms.push_back({body, consequent, rank});
                spans.push_back(span);
            } else {
                throw ParseError("expected 'context' or 'norm', got '" + head.text + "'", line_no,
                                 head.col);
            }
        }

        if (end == text.size())
            break;
        begin = end + 1;
    }

    HansDocument doc{std::move(source_name), System::make(norms, context), {}, {}};
    for (size_t i = 0; i < spans.size(); ++i)
        doc.norm_spans[static_cast<int>(i)] = spans[i];
    doc.warnings = lint(doc.system);
    return doc;
}

std::string render_hans(const System& system) {
    std::string out;
    std::vector<Literal> ctx;
    for (const Literal& l : system.context())
        if (!l.is_top())
            ctx.push_back(l);
    if (!ctx.empty()) {
        out += "context ";
        for (size_t i = 0; i < ctx.size(); ++i) {
            if (i)
                out += ", ";
            out += ctx[i].to_string();
        }
        out += "\n";
    }

    std::vector<Norm> norms = system.norms();
    std::sort(norms.begin(), norms.end(), [](const Norm& a, const Norm& b) {
        return std::tie(a.rank, a.antecedent, a.consequent) <
               std::tie(b.rank, b.antecedent, b.consequent);
    });
    for (const Norm& n : norms)
        out += "norm " + n.antecedent.to_string() + " -> " + n.consequent.to_string() + " rank " +
               std::to_string(n.rank) + "\n";
    return out;
}

}  // namespace hans
