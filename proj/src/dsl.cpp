#include "streg/dsl.hpp"

#include <cctype>
#include <map>

namespace streg {

namespace {

bool is_name_char(char c) { return c >= 'a' && c <= 'z'; }

const std::map<std::string, NodeKind, std::less<>>& op_table() {
    static const std::map<std::string, NodeKind, std::less<>> table = {
        {"startwith", NodeKind::StartWith},
        {"endwith", NodeKind::EndWith},
        {"contain", NodeKind::Contain},
        {"not", NodeKind::Not},
        {"optional", NodeKind::Optional},
        {"star", NodeKind::Star},
        {"concat", NodeKind::Concat},
        {"and", NodeKind::And},
        {"or", NodeKind::Or},
        {"rep", NodeKind::Rep},
        {"repatleast", NodeKind::RepAtLeast},
        {"reprange", NodeKind::RepRange},
        {"notcc", NodeKind::NotCc},
    };
    return table;
}


class Parser {
public:
    explicit Parser(std::vector<DslToken> tokens) : tokens_(std::move(tokens)) {}

    AstPtr parse() {
        AstPtr result = expr();
        if (pos_ < tokens_.size())
            fail("trailing input after expression");
        return result;
    }

private:
    std::vector<DslToken> tokens_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        std::size_t at = pos_ < tokens_.size() ? tokens_[pos_].pos
                         : tokens_.empty()    ? 0
                                              : tokens_.back().pos + tokens_.back().text.size();
        throw DslError(msg, at);
    }

    const DslToken& peek() {
        if (pos_ >= tokens_.size())
            fail("unexpected end of input");
        return tokens_[pos_];
    }

    DslToken take() {
        DslToken t = peek();
        ++pos_;
        return t;
    }

    void expect(std::string_view text) {
        if (peek().text != text)
            fail(std::string("expected '") + std::string(text) + "', found '" + peek().text + "'");
        ++pos_;
    }

    int count_arg() {
        const DslToken& t = peek();
        if (t.text == "int") {
            ++pos_;
            return kCountAnon;
        }
        if (t.text.empty() || !std::isdigit(static_cast<unsigned char>(t.text[0])))
            fail("expected a repetition count, found '" + t.text + "'");
        if (t.text.size() > 3)
            fail("repetition count too large");
        int value = std::stoi(t.text);
        if (value > kMaxCount)
            fail("repetition count too large");
        ++pos_;
        return value;
    }

    AstPtr terminal(const DslToken& t) {
        std::string_view content(t.text);
        content.remove_prefix(1);
        content.remove_suffix(1);
        if (content.empty())
            throw DslError("empty terminal '<>'", t.pos);
        if (auto cc = char_class_from_name(content))
            return re::cls(*cc);
        for (char c : content)
            if (!in_alphabet(c))
                throw DslError(std::string("constant uses a character outside the alphabet: '") + c + "'",
                               t.pos);
        if (content.size() == 1)
            return re::ch(content[0]);
        return re::str(std::string(content));
    }

    AstPtr expr() {
        DslToken t = take();
        if (t.text.size() >= 2 && t.text.front() == '<' && t.text.back() == '>')
            return terminal(t);
        if (t.text == "const")
            return re::anon_const();
        auto it = op_table().find(t.text);
        if (it == op_table().end())
            throw DslError("unknown operator '" + t.text + "'", t.pos);
        NodeKind kind = it->second;
        expect("(");
        try {
            return operator_body(kind);
        } catch (const DslError&) {
            throw;
        } catch (const Error& e) {
            throw DslError(e.what(), t.pos);
        }
    }

    AstPtr operator_body(NodeKind kind) {
        if (arity(kind) == 1 && count_params(kind) == 0) {
            AstPtr child = expr();
            expect(")");
            switch (kind) {
            case NodeKind::StartWith: return re::startwith(child);
            case NodeKind::EndWith: return re::endwith(child);
            case NodeKind::Contain: return re::contain(child);
            case NodeKind::Not: return re::negation(child);
            case NodeKind::Optional: return re::optional(child);
            case NodeKind::Star: return re::star(child);
            case NodeKind::NotCc: return re::notcc(child);
            default: break;
            }
            throw Error("unhandled unary operator");
        }
        if (count_params(kind) > 0) {
            AstPtr child = expr();
            expect(",");
            int k1 = count_arg();
            if (kind == NodeKind::Rep) {
                expect(")");
                return re::rep(child, k1);
            }
            if (kind == NodeKind::RepAtLeast) {
                expect(")");
                return re::repatleast(child, k1);
            }
            expect(",");
            int k2 = count_arg();
            expect(")");
            return re::reprange(child, k1, k2);
        }
        // Binary operators accept two or more arguments; extras right-nest, so
        // concat(a,b,c) parses as concat(a,concat(b,c)).
        std::vector<AstPtr> args;
        args.push_back(expr());
        while (peek().text == ",") {
            ++pos_;
            args.push_back(expr());
        }
        expect(")");
        if (args.size() < 2)
            fail("binary operator needs at least two arguments");
        return chain_build(args, kind);
    }
};

} // namespace

std::vector<DslToken> tokenize_dsl(std::string_view text) {
    std::vector<DslToken> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(' || c == ')' || c == ',') {
            tokens.push_back({std::string(1, c), i});
            ++i;
            continue;
        }
        if (c == '<') {
            std::size_t close = text.find('>', i + 1);
            if (close == std::string_view::npos)
                throw DslError("unterminated terminal: missing '>'", i);
            tokens.push_back({std::string(text.substr(i, close - i + 1)), i});
            i = close + 1;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            tokens.push_back({std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (is_name_char(c)) {
            std::size_t j = i;
            while (j < text.size() && is_name_char(text[j]))
                ++j;
            tokens.push_back({std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        throw DslError(std::string("unexpected character '") + c + "'", i);
    }
    return tokens;
}

AstPtr parse_dsl(std::string_view text) {
    Parser parser(tokenize_dsl(text));
    return parser.parse();
}

namespace {

std::string count_text(int k) {
    if (k == kCountAnon)
        return "int";
    if (k == kCountHole)
        return "?";
    return std::to_string(k);
}

void print_impl(const AstPtr& a, std::string& out) {
    switch (a->kind) {
    case NodeKind::ClassTerm:
        out += '<';
        out += char_class_name(a->cls);
        out += '>';
        return;
    case NodeKind::ConstChar:
    case NodeKind::ConstString:
        out += '<';
        out += a->text;
        out += '>';
        return;
    case NodeKind::AnonConst:
        out += "const";
        return;
    case NodeKind::Hole:
        out += '?';
        return;
    default:
        break;
    }
    out += node_name(a->kind);
    out += '(';
    for (std::size_t i = 0; i < a->children.size(); ++i) {
        if (i)
            out += ',';
        print_impl(a->children[i], out);
    }
    if (count_params(a->kind) >= 1) {
        out += ',';
        out += count_text(a->k1);
    }
    if (count_params(a->kind) >= 2) {
        out += ',';
        out += count_text(a->k2);
    }
    out += ')';
}

} // namespace

std::string print_dsl(const AstPtr& a) {
    std::string out;
    print_impl(a, out);
    return out;
}

std::vector<std::string> dsl_token_strings(const AstPtr& a) {
    std::vector<std::string> out;
    for (DslToken& t : tokenize_dsl(print_dsl(a)))
        out.push_back(std::move(t.text));
    return out;
}

// ── Standard notation ───────────────────────────────────────────────────────

namespace {

// Binding strength, loosest first. Complement results sit at the postfix
// level: they are parenthesized when a postfix operator applies to them but
// concatenate without extra parentheses.
enum Level { kLevelOr = 0, kLevelAnd, kLevelConcat, kLevelPostfix, kLevelAtom };

constexpr std::string_view kMetaChars = ".+*?|&~()[]{}^$\\";

void append_escaped(std::string& out, char c) {
    if (kMetaChars.find(c) != std::string_view::npos)
        out += '\\';
    out += c;
}

std::string class_body(CharClass c) {
    switch (c) {
    case CharClass::Let: return "A-Za-z";
    case CharClass::Cap: return "A-Z";
    case CharClass::Low: return "a-z";
    case CharClass::Num: return "0-9";
    case CharClass::Spec: return std::string(kSpecialChars);
    default: throw Error("class_body: class has no bracket form");
    }
}

struct Rendered {
    std::string text;
    int level;
};

Rendered render(const AstPtr& a);

std::string child_text(const AstPtr& a, int min_level) {
    Rendered r = render(a);
    if (r.level < min_level)
        return "(" + r.text + ")";
    return r.text;
}

std::string forced_parens(const AstPtr& a) { return "(" + render(a).text + ")"; }

Rendered render(const AstPtr& a) {
    switch (a->kind) {
    case NodeKind::ClassTerm:
        switch (a->cls) {
        case CharClass::Any: return {".", kLevelAtom};
        case CharClass::Null: return {"∅", kLevelAtom};
        default: return {"[" + class_body(a->cls) + "]", kLevelAtom};
        }
    case NodeKind::ConstChar: {
        std::string out;
        append_escaped(out, a->text[0]);
        return {out, kLevelAtom};
    }
    case NodeKind::ConstString: {
        std::string out;
        for (char c : a->text)
            append_escaped(out, c);
        return {out, kLevelConcat};
    }
    case NodeKind::StartWith:
        return {child_text(a->children[0], kLevelConcat) + ".*", kLevelConcat};
    case NodeKind::EndWith:
        return {".*" + child_text(a->children[0], kLevelConcat), kLevelConcat};
    case NodeKind::Contain:
        return {".*" + child_text(a->children[0], kLevelConcat) + ".*", kLevelConcat};
    case NodeKind::Not:
        return {"~" + forced_parens(a->children[0]), kLevelPostfix};
    case NodeKind::Optional:
        return {child_text(a->children[0], kLevelAtom) + "?", kLevelPostfix};
    case NodeKind::Star:
        return {child_text(a->children[0], kLevelAtom) + "*", kLevelPostfix};
    case NodeKind::Concat:
        return {child_text(a->children[0], kLevelConcat) + child_text(a->children[1], kLevelConcat),
                kLevelConcat};
    case NodeKind::And:
        return {forced_parens(a->children[0]) + "&" + forced_parens(a->children[1]), kLevelAnd};
    case NodeKind::Or:
        return {child_text(a->children[0], kLevelOr) + "|" + child_text(a->children[1], kLevelOr),
                kLevelOr};
    case NodeKind::Rep:
    case NodeKind::RepAtLeast:
    case NodeKind::RepRange: {
        if (a->k1 < 0 || (count_params(a->kind) >= 2 && a->k2 < 0))
            throw Error("to_standard_regex: tree contains placeholder counts");
        std::string suffix = "{" + std::to_string(a->k1);
        if (a->kind == NodeKind::RepAtLeast)
            suffix += ",";
        else if (a->kind == NodeKind::RepRange)
            suffix += "," + std::to_string(a->k2);
        suffix += "}";
        return {child_text(a->children[0], kLevelAtom) + suffix, kLevelPostfix};
    }
    case NodeKind::NotCc: {
        CharSet inside = single_symbol_chars(a->children[0]);
        CharSet outside = ~inside;
        if (outside.none())
            return {"∅", kLevelAtom};
        if (inside.none())
            return {".", kLevelAtom};
        std::string body;
        for (char c : charset_to_string(inside))
            body += c;
        return {"[^" + body + "]", kLevelAtom};
    }
    case NodeKind::AnonConst:
    case NodeKind::Hole:
        throw Error("to_standard_regex: tree contains placeholder nodes");
    }
    throw Error("to_standard_regex: bad node kind");
}

} // namespace

std::string to_standard_regex(const AstPtr& a) {
    return render(a).text;
}

} // namespace streg
