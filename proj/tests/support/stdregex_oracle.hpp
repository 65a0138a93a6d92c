#pragma once

// Independent reader for the conventional regex notation the library emits:
// postfix * ? {k} {k,} {k1,k2}, juxtaposition, ~(...) complement, (..)&(..)
// intersection, | union, bracket classes (with leading ^ negation), backslash
// escapes, . and U+2205. Parses into a plain AST built from set-algebra
// primitives so the result can be interpreted by the brute-force matcher.
//
// Negated bracket sets have no single-literal form, so [^...] is modeled as
// and(<any>, not(union of members)): exactly one symbol, outside the set.

#include <string>
#include <string_view>

#include "streg/ast.hpp"

namespace streg::test {

class StdRegexParser {
public:
    explicit StdRegexParser(std::string_view text) : text_(text) {}

    AstPtr parse() {
        AstPtr r = parse_or();
        if (pos_ != text_.size())
            throw Error("stdregex oracle: trailing input at offset " + std::to_string(pos_));
        return r;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool starts(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

    AstPtr parse_or() {
        AstPtr left = parse_and();
        while (!eof() && peek() == '|') {
            ++pos_;
            left = re::disj(left, parse_and());
        }
        return left;
    }

    AstPtr parse_and() {
        AstPtr left = parse_concat();
        while (!eof() && peek() == '&') {
            ++pos_;
            left = re::conj(left, parse_concat());
        }
        return left;
    }

    bool at_atom_start() const {
        if (eof())
            return false;
        char c = peek();
        return c != '|' && c != '&' && c != ')' && c != '*' && c != '?' && c != '{';
    }

    AstPtr parse_concat() {
        AstPtr left = parse_postfix();
        while (at_atom_start())
            left = re::concat(left, parse_postfix());
        return left;
    }

    AstPtr parse_postfix() {
        AstPtr base = parse_atom();
        while (!eof()) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                base = re::star(base);
            } else if (c == '?') {
                ++pos_;
                base = re::optional(base);
            } else if (c == '{') {
                ++pos_;
                int k1 = parse_int();
                if (eof())
                    throw Error("stdregex oracle: unterminated count");
                if (peek() == '}') {
                    ++pos_;
                    base = re::rep(base, k1);
                } else if (peek() == ',') {
                    ++pos_;
                    if (!eof() && peek() == '}') {
                        ++pos_;
                        base = re::repatleast(base, k1);
                    } else {
                        int k2 = parse_int();
                        if (eof() || peek() != '}')
                            throw Error("stdregex oracle: unterminated count");
                        ++pos_;
                        base = re::reprange(base, k1, k2);
                    }
                } else {
                    throw Error("stdregex oracle: bad count syntax");
                }
            } else {
                break;
            }
        }
        return base;
    }

    int parse_int() {
        if (eof() || peek() < '0' || peek() > '9')
            throw Error("stdregex oracle: expected a digit at offset " + std::to_string(pos_));
        int value = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (peek() - '0');
            ++pos_;
        }
        return value;
    }

    AstPtr parse_atom() {
        if (eof())
            throw Error("stdregex oracle: unexpected end of pattern");
        char c = peek();
        if (c == '~') {
            ++pos_;
            if (eof() || peek() != '(')
                throw Error("stdregex oracle: ~ must be followed by a group");
            return re::negation(parse_group());
        }
        if (c == '(')
            return parse_group();
        if (c == '[')
            return parse_bracket();
        if (c == '.') {
            ++pos_;
            return re::cls(CharClass::Any);
        }
        if (starts("∅")) {
            pos_ += std::string_view("∅").size();
            return re::cls(CharClass::Null);
        }
        if (c == '\\') {
            ++pos_;
            if (eof())
                throw Error("stdregex oracle: dangling backslash");
            char lit = text_[pos_++];
            return re::ch(lit);
        }
        ++pos_;
        return re::ch(c);
    }

    AstPtr parse_group() {
        ++pos_; // '('
        AstPtr inner = parse_or();
        if (eof() || peek() != ')')
            throw Error("stdregex oracle: missing ')'");
        ++pos_;
        return inner;
    }

    AstPtr parse_bracket() {
        ++pos_; // '['
        bool negated = false;
        if (!eof() && peek() == '^') {
            negated = true;
            ++pos_;
        }
        std::string members;
        bool first = true;
        while (!eof() && peek() != ']') {
            char c = text_[pos_++];
            // '-' is literal at the start or end, a range marker elsewhere.
            if (c == '-' && !first && !eof() && peek() != ']') {
                char lo = members.back();
                char hi = text_[pos_++];
                for (char x = static_cast<char>(lo + 1); x <= hi; ++x)
                    members.push_back(x);
            } else {
                members.push_back(c);
            }
            first = false;
        }
        if (eof())
            throw Error("stdregex oracle: missing ']'");
        ++pos_; // ']'
        if (members.empty())
            throw Error("stdregex oracle: empty bracket set");
        AstPtr set;
        for (char m : members) {
            AstPtr atom = re::ch(m);
            set = set ? re::disj(set, atom) : atom;
        }
        if (!negated)
            return set;
        return re::conj(re::cls(CharClass::Any), re::negation(set));
    }
};

inline AstPtr parse_standard_regex(std::string_view text) {
    return StdRegexParser(text).parse();
}

} // namespace streg::test
