#include "streg/approx.hpp"

#include <array>
#include <cctype>

#include "streg/dsl.hpp"
#include "streg/errors.hpp"

namespace streg {

namespace {

constexpr std::array<NodeKind, 13> kOperators = {
    NodeKind::StartWith, NodeKind::EndWith,  NodeKind::Contain, NodeKind::Not,
    NodeKind::Optional,  NodeKind::Star,     NodeKind::Concat,  NodeKind::And,
    NodeKind::Or,        NodeKind::Rep,      NodeKind::RepAtLeast,
    NodeKind::RepRange,  NodeKind::NotCc};

bool op_from_name(const std::string& name, NodeKind* out) {
    for (NodeKind k : kOperators)
        if (name == node_name(k)) {
            *out = k;
            return true;
        }
    return false;
}

class PrefixParser {
public:
    explicit PrefixParser(const std::vector<std::string>& toks) : toks_(toks) {}

    AstPtr parse() {
        AstPtr root = expr();
        if (!done())
            fail("trailing token after a complete regex", i_, cur());
        return root;
    }

private:
    const std::vector<std::string>& toks_;
    std::size_t i_ = 0;

    bool done() const { return i_ >= toks_.size(); }
    const std::string& cur() const { return toks_[i_]; }

    [[noreturn]] static void fail(const std::string& what, std::size_t index,
                                  const std::string& tok) {
        throw TokenError("token " + std::to_string(index) + " ('" + tok + "'): " + what, index,
                         tok);
    }

    AstPtr expr() {
        if (done())
            return re::hole();
        const std::string t = toks_[i_++];
        if (!t.empty() && t[0] == '<')
            return leaf(t);
        NodeKind kind;
        if (!op_from_name(t, &kind))
            fail("expected an expression", i_ - 1, t);
        if (!done()) {
            if (cur() != "(")
                fail("expected '(' after the operator", i_, cur());
            ++i_;
        }
        // from here exhaustion at any point leaves holes behind
        if (arity(kind) == 1 && count_params(kind) == 0) {
            std::size_t child_at = i_;
            AstPtr c = expr();
            if (kind == NodeKind::NotCc && c->kind != NodeKind::ClassTerm &&
                c->kind != NodeKind::ConstChar && c->kind != NodeKind::Hole)
                fail("notcc needs a class or single-character literal", child_at, toks_[child_at]);
            close_paren();
            return unary(kind, std::move(c));
        }
        if (count_params(kind) > 0)
            return repetition(kind);
        return chain(kind);
    }

    AstPtr leaf(const std::string& t) const {
        try {
            return parse_dsl(t);
        } catch (const Error&) {
            fail("expected an expression", i_ - 1, t);
        }
    }

    static AstPtr unary(NodeKind kind, AstPtr c) {
        switch (kind) {
        case NodeKind::StartWith: return re::startwith(std::move(c));
        case NodeKind::EndWith: return re::endwith(std::move(c));
        case NodeKind::Contain: return re::contain(std::move(c));
        case NodeKind::Not: return re::negation(std::move(c));
        case NodeKind::Optional: return re::optional(std::move(c));
        case NodeKind::Star: return re::star(std::move(c));
        default: return re::notcc(std::move(c)); // NodeKind::NotCc
        }
    }

    AstPtr repetition(NodeKind kind) {
        AstPtr c = expr();
        int k1 = kCountHole, k2 = kCountHole;
        if (comma_or_end(&k1) && kind == NodeKind::RepRange && comma_or_end(&k2)) {
            if (k1 >= k2)
                fail("repetition range needs the counts increasing", i_ - 1, cur_prev());
        }
        close_paren(); // a no-op when the stream already ran out
        if (kind == NodeKind::Rep)
            return re::rep(std::move(c), k1);
        if (kind == NodeKind::RepAtLeast)
            return re::repatleast(std::move(c), k1);
        return re::reprange(std::move(c), k1, k2);
    }

    // Consumes "," plus a count if the stream continues; false on exhaustion.
    bool comma_or_end(int* k) {
        if (done())
            return false;
        if (cur() != ",")
            fail("expected ',' before a repetition count", i_, cur());
        ++i_;
        if (done())
            return false;
        *k = count_token();
        return true;
    }

    int count_token() {
        const std::string t = toks_[i_];
        bool digits = !t.empty() && t.size() <= 3;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                digits = false;
        if (!digits || std::stoi(t) > kMaxCount)
            fail("expected a repetition count", i_, t);
        ++i_;
        return std::stoi(t);
    }

    const std::string& cur_prev() const { return toks_[i_ - 1]; }

    AstPtr chain(NodeKind kind) {
        std::vector<AstPtr> args;
        args.push_back(expr());
        while (true) {
            if (done()) {
                // the node may close or keep going; a trailing hole covers both
                args.push_back(re::hole());
                break;
            }
            if (cur() == ")") {
                if (args.size() < 2)
                    fail("operator needs at least two arguments", i_, cur());
                ++i_;
                break;
            }
            if (cur() != ",")
                fail("expected ',' or ')' after an argument", i_, cur());
            ++i_;
            if (done()) {
                args.push_back(re::hole());
                break;
            }
            args.push_back(expr());
        }
        return chain_build(args, kind);
    }

    void close_paren() {
        if (done())
            return;
        if (cur() != ")")
            fail("expected ')'", i_, cur());
        ++i_;
    }
};

const Dfa& universal_dfa() {
    static const Dfa d = compile(re::star(re::cls(CharClass::Any)));
    return d;
}
const Dfa& empty_dfa() {
    static const Dfa d = compile(re::cls(CharClass::Null));
    return d;
}
const Dfa& epsilon_dfa() {
    static const Dfa d = compile(re::optional(re::cls(CharClass::Null)));
    return d;
}
const Dfa& any_symbol_dfa() {
    static const Dfa d = compile(re::cls(CharClass::Any));
    return d;
}

// want_superset flips at every negation so each hole substitution keeps the
// whole automaton on the right side of every completion.
Dfa approx_rec(const AstPtr& a, bool want_superset, ApproxCache* cache) {
    if (!contains_hole(a))
        return compile(a); // exact on finished subtrees
    std::string key;
    if (cache) {
        key = (want_superset ? '+' : '-') + print_dsl(a);
        if (auto it = cache->memo.find(key); it != cache->memo.end())
            return it->second;
    }
    auto rec = [&](const AstPtr& c) { return approx_rec(c, want_superset, cache); };
    Dfa d = [&]() -> Dfa {
        switch (a->kind) {
        case NodeKind::Hole:
            return want_superset ? universal_dfa() : empty_dfa();
        case NodeKind::Not:
            return complement(approx_rec(a->children[0], !want_superset, cache));
        case NodeKind::NotCc:
            // the unfinished literal could still name any character set
            return want_superset ? any_symbol_dfa() : empty_dfa();
        case NodeKind::And:
            return intersect(rec(a->children[0]), rec(a->children[1]));
        case NodeKind::Or:
            return union_dfa(rec(a->children[0]), rec(a->children[1]));
        case NodeKind::Concat:
            return concat_dfa(rec(a->children[0]), rec(a->children[1]));
        case NodeKind::Optional:
            return union_dfa(rec(a->children[0]), epsilon_dfa());
        case NodeKind::Star:
            return star_dfa(rec(a->children[0]));
        case NodeKind::StartWith:
            return concat_dfa(rec(a->children[0]), universal_dfa());
        case NodeKind::EndWith:
            return concat_dfa(universal_dfa(), rec(a->children[0]));
        case NodeKind::Contain:
            return concat_dfa(concat_dfa(universal_dfa(), rec(a->children[0])), universal_dfa());
        case NodeKind::Rep:
            if (a->k1 == kCountHole)
                return want_superset ? star_dfa(rec(a->children[0])) : empty_dfa();
            return repeat_dfa(rec(a->children[0]), a->k1, a->k1);
        case NodeKind::RepAtLeast:
            if (a->k1 == kCountHole)
                return want_superset ? star_dfa(rec(a->children[0])) : empty_dfa();
            return repeat_dfa(rec(a->children[0]), a->k1, std::nullopt);
        case NodeKind::RepRange:
            if (a->k1 == kCountHole)
                return want_superset ? star_dfa(rec(a->children[0])) : empty_dfa();
            if (a->k2 == kCountHole)
                // every completion spans at least [k1, k1]
                return want_superset ? repeat_dfa(rec(a->children[0]), a->k1, std::nullopt)
                                     : repeat_dfa(rec(a->children[0]), a->k1, a->k1);
            return repeat_dfa(rec(a->children[0]), a->k1, a->k2);
        default:
            throw Error("approximation: node cannot hold a hole");
        }
    }();
    d = minimize(d);
    if (cache)
        cache->memo.emplace(std::move(key), d);
    return d;
}

} // namespace

PartialRegex from_token_prefix(const std::vector<std::string>& tokens) {
    return {PrefixParser(tokens).parse(), tokens};
}

bool is_complete(const PartialRegex& p) { return p.ast && !contains_hole(p.ast); }

Dfa over_approx(const PartialRegex& p, ApproxCache* cache) {
    return approx_rec(p.ast, true, cache);
}

Dfa under_approx(const PartialRegex& p, ApproxCache* cache) {
    return approx_rec(p.ast, false, cache);
}

bool feasible(const PartialRegex& p, const std::vector<std::string>& pos,
              const std::vector<std::string>& neg, ApproxCache* cache) {
    try {
        if (!pos.empty()) {
            Dfa over = over_approx(p, cache);
            for (const std::string& s : pos)
                if (!over.matches(s))
                    return false;
        }
        if (!neg.empty()) {
            Dfa under = under_approx(p, cache);
            for (const std::string& s : neg)
                if (under.matches(s))
                    return false;
        }
    } catch (const StateLimitError&) {
        return true; // too big to decide; never prune on a blowup
    }
    return true;
}

} // namespace streg
