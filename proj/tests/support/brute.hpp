#pragma once

// Brute-force semantics oracles, deliberately written against the AST alone
// so they share no code with the automaton layer they are used to check.
//
//  * brute_language: the exact set of matching strings over a restricted
//    symbol universe up to a length bound, computed bottom-up on string sets.
//  * brute_matches: exact single-string membership via memoized substring
//    decomposition, with no length or universe restriction.

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "streg/ast.hpp"

namespace streg::test {

inline std::vector<std::string> all_strings(const std::string& symbols, int max_len) {
    std::vector<std::string> out{""};
    std::vector<std::string> frontier{""};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const std::string& s : frontier)
            for (char c : symbols)
                next.push_back(s + c);
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

namespace detail {

inline bool class_member(CharClass cls, char c) {
    switch (cls) {
    case CharClass::Let: return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
    case CharClass::Cap: return c >= 'A' && c <= 'Z';
    case CharClass::Low: return c >= 'a' && c <= 'z';
    case CharClass::Num: return c >= '0' && c <= '9';
    case CharClass::Spec: return kSpecialChars.find(c) != std::string_view::npos;
    case CharClass::Any: return in_alphabet(c);
    case CharClass::Null: return false;
    }
    return false;
}

inline bool literal_single_member(const AstPtr& lit, char c) {
    if (lit->kind == NodeKind::ClassTerm)
        return class_member(lit->cls, c);
    if (lit->kind == NodeKind::ConstChar)
        return lit->text[0] == c;
    throw Error("brute: notcc operand is not a single-symbol literal");
}

using StrSet = std::set<std::string>;

struct SetEval {
    const std::vector<std::string>& universe;
    int max_len;

    StrSet concat_sets(const StrSet& a, const StrSet& b) const {
        StrSet out;
        for (const std::string& x : a) {
            if (static_cast<int>(x.size()) > max_len)
                continue;
            for (const std::string& y : b)
                if (static_cast<int>(x.size() + y.size()) <= max_len)
                    out.insert(x + y);
        }
        return out;
    }

    StrSet star_set(const StrSet& base) const {
        StrSet out{""};
        StrSet frontier{""};
        while (true) {
            StrSet next;
            for (const std::string& x : frontier)
                for (const std::string& y : base) {
                    if (y.empty())
                        continue;
                    if (static_cast<int>(x.size() + y.size()) > max_len)
                        continue;
                    std::string joined = x + y;
                    if (!out.count(joined))
                        next.insert(joined);
                }
            if (next.empty())
                break;
            out.insert(next.begin(), next.end());
            frontier = std::move(next);
        }
        return out;
    }

    StrSet power(const StrSet& base, int k) const {
        StrSet out{""};
        for (int i = 0; i < k; ++i) {
            out = concat_sets(out, base);
            if (out.empty())
                break;
        }
        return out;
    }

    StrSet eval(const AstPtr& a) const {
        switch (a->kind) {
        case NodeKind::ClassTerm: {
            StrSet out;
            for (const std::string& s : universe)
                if (s.size() == 1 && class_member(a->cls, s[0]))
                    out.insert(s);
            return out;
        }
        case NodeKind::ConstChar:
        case NodeKind::ConstString: {
            StrSet out;
            if (static_cast<int>(a->text.size()) <= max_len) {
                bool inside = true;
                for (char c : a->text)
                    inside = inside && in_alphabet(c);
                // Keep only if representable in the universe.
                for (const std::string& s : universe)
                    if (s == a->text)
                        out.insert(s);
                (void)inside;
            }
            return out;
        }
        case NodeKind::NotCc: {
            StrSet out;
            for (const std::string& s : universe)
                if (s.size() == 1 && in_alphabet(s[0]) &&
                    !literal_single_member(a->children[0], s[0]))
                    out.insert(s);
            return out;
        }
        case NodeKind::Not: {
            StrSet inner = eval(a->children[0]);
            StrSet out;
            for (const std::string& s : universe)
                if (!inner.count(s))
                    out.insert(s);
            return out;
        }
        case NodeKind::And: {
            StrSet x = eval(a->children[0]);
            StrSet y = eval(a->children[1]);
            StrSet out;
            for (const std::string& s : x)
                if (y.count(s))
                    out.insert(s);
            return out;
        }
        case NodeKind::Or: {
            StrSet out = eval(a->children[0]);
            StrSet y = eval(a->children[1]);
            out.insert(y.begin(), y.end());
            return out;
        }
        case NodeKind::Concat:
            return concat_sets(eval(a->children[0]), eval(a->children[1]));
        case NodeKind::Optional: {
            StrSet out = eval(a->children[0]);
            out.insert("");
            return out;
        }
        case NodeKind::Star:
            return star_set(eval(a->children[0]));
        case NodeKind::Rep:
            return power(eval(a->children[0]), a->k1);
        case NodeKind::RepAtLeast:
            return concat_sets(power(eval(a->children[0]), a->k1), star_set(eval(a->children[0])));
        case NodeKind::RepRange: {
            StrSet out;
            for (int k = a->k1; k <= a->k2; ++k) {
                StrSet p = power(eval(a->children[0]), k);
                out.insert(p.begin(), p.end());
            }
            return out;
        }
        case NodeKind::StartWith: {
            StrSet inner = eval(a->children[0]);
            StrSet out;
            for (const std::string& s : universe)
                for (std::size_t n = 0; n <= s.size(); ++n)
                    if (inner.count(s.substr(0, n))) {
                        out.insert(s);
                        break;
                    }
            return out;
        }
        case NodeKind::EndWith: {
            StrSet inner = eval(a->children[0]);
            StrSet out;
            for (const std::string& s : universe)
                for (std::size_t n = 0; n <= s.size(); ++n)
                    if (inner.count(s.substr(n))) {
                        out.insert(s);
                        break;
                    }
            return out;
        }
        case NodeKind::Contain: {
            StrSet inner = eval(a->children[0]);
            StrSet out;
            for (const std::string& s : universe) {
                bool hit = false;
                for (std::size_t i = 0; i <= s.size() && !hit; ++i)
                    for (std::size_t n = 0; i + n <= s.size() && !hit; ++n)
                        hit = inner.count(s.substr(i, n)) > 0;
                if (hit)
                    out.insert(s);
            }
            return out;
        }
        default:
            throw Error("brute_language: placeholder node");
        }
    }
};

// ── Single-string matcher ───────────────────────────────────────────────────

struct Matcher {
    const std::string& s;
    std::map<std::tuple<const RegexAst*, int, int>, bool> memo;

    bool match(const AstPtr& a, int i, int j) {
        auto key = std::make_tuple(a.get(), i, j);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        memo.emplace(key, false); // cycle guard; real value stored below
        bool result = compute(a, i, j);
        memo[key] = result;
        return result;
    }

    bool compute(const AstPtr& a, int i, int j) {
        int len = j - i;
        switch (a->kind) {
        case NodeKind::ClassTerm:
            return len == 1 && class_member(a->cls, s[static_cast<std::size_t>(i)]);
        case NodeKind::ConstChar:
        case NodeKind::ConstString:
            return len == static_cast<int>(a->text.size()) &&
                   s.compare(static_cast<std::size_t>(i), a->text.size(), a->text) == 0;
        case NodeKind::NotCc:
            return len == 1 && in_alphabet(s[static_cast<std::size_t>(i)]) &&
                   !literal_single_member(a->children[0], s[static_cast<std::size_t>(i)]);
        case NodeKind::Not:
            return !match(a->children[0], i, j);
        case NodeKind::And:
            return match(a->children[0], i, j) && match(a->children[1], i, j);
        case NodeKind::Or:
            return match(a->children[0], i, j) || match(a->children[1], i, j);
        case NodeKind::Optional:
            return len == 0 || match(a->children[0], i, j);
        case NodeKind::Concat:
            for (int m = i; m <= j; ++m)
                if (match(a->children[0], i, m) && match(a->children[1], m, j))
                    return true;
            return false;
        case NodeKind::Star:
            if (len == 0)
                return true;
            for (int m = i + 1; m <= j; ++m)
                if (match(a->children[0], i, m) && match(a, m, j))
                    return true;
            return false;
        case NodeKind::Rep:
        case NodeKind::RepAtLeast:
        case NodeKind::RepRange: {
            // End positions reachable after exactly c copies of the child.
            std::set<int> positions{i};
            int exact_until = a->kind == NodeKind::RepRange ? a->k2 : a->k1;
            auto count_ok = [&](int c) {
                if (a->kind == NodeKind::Rep)
                    return c == a->k1;
                if (a->kind == NodeKind::RepRange)
                    return c >= a->k1 && c <= a->k2;
                return c >= a->k1;
            };
            if (count_ok(0) && j == i)
                return true;
            for (int c = 1; c <= exact_until; ++c) {
                std::set<int> next;
                for (int p : positions)
                    for (int m = p; m <= j; ++m)
                        if (match(a->children[0], p, m))
                            next.insert(m);
                positions = std::move(next);
                if (positions.empty())
                    return false;
                if (count_ok(c) && positions.count(j))
                    return true;
            }
            if (a->kind != NodeKind::RepAtLeast)
                return false;
            // Star closure after the mandatory copies; empty chunks add nothing.
            std::set<int> closed = positions;
            std::vector<int> stack(positions.begin(), positions.end());
            while (!stack.empty()) {
                int p = stack.back();
                stack.pop_back();
                for (int m = p + 1; m <= j; ++m)
                    if (match(a->children[0], p, m) && closed.insert(m).second)
                        stack.push_back(m);
            }
            return closed.count(j) > 0;
        }
        case NodeKind::StartWith:
            for (int m = i; m <= j; ++m)
                if (match(a->children[0], i, m))
                    return true;
            return false;
        case NodeKind::EndWith:
            for (int m = i; m <= j; ++m)
                if (match(a->children[0], m, j))
                    return true;
            return false;
        case NodeKind::Contain:
            for (int b = i; b <= j; ++b)
                for (int e = b; e <= j; ++e)
                    if (match(a->children[0], b, e))
                        return true;
            return false;
        default:
            throw Error("brute_matches: placeholder node");
        }
    }
};

} // namespace detail

inline std::set<std::string> brute_language(const AstPtr& a, const std::string& symbols,
                                            int max_len) {
    std::vector<std::string> universe = all_strings(symbols, max_len);
    detail::SetEval eval{universe, max_len};
    return eval.eval(a);
}

inline bool brute_matches(const AstPtr& a, const std::string& s) {
    for (char c : s)
        if (!in_alphabet(c))
            return false;
    detail::Matcher m{s, {}};
    return m.match(a, 0, static_cast<int>(s.size()));
}

} // namespace streg::test
