#pragma once

// Random tree generator used by the property tests, plus a set of
// language-preserving rewrites for producing equivalent-but-distinct pairs.
// Constants are drawn from a deliberately small pool so the brute-force
// string-set oracle stays tractable.

#include <string>
#include <vector>

#include "streg/ast.hpp"
#include "streg/rng.hpp"

namespace streg::test {

inline const std::string kGenPool = "abA01-";

inline AstPtr gen_class(Rng& rng) {
    static const CharClass kChoices[] = {CharClass::Let, CharClass::Cap, CharClass::Low,
                                         CharClass::Num, CharClass::Spec, CharClass::Any};
    return re::cls(kChoices[rng.below(6)]);
}

inline AstPtr gen_terminal(Rng& rng) {
    switch (rng.below(4)) {
    case 0:
    case 1:
        return gen_class(rng);
    case 2:
        return re::ch(kGenPool[rng.below(kGenPool.size())]);
    default: {
        std::string s;
        std::size_t len = 2 + rng.below(2);
        for (std::size_t i = 0; i < len; ++i)
            s.push_back(kGenPool[rng.below(kGenPool.size())]);
        return re::str(s);
    }
    }
}

// depth_budget 0 forces a terminal. Counts stay small (<= 3) so the
// restricted-universe oracle can see past the repetition bounds.
inline AstPtr gen_ast(Rng& rng, int depth_budget) {
    if (depth_budget <= 0 || rng.chance(0.25))
        return gen_terminal(rng);
    switch (rng.below(13)) {
    case 0:
        return re::startwith(gen_ast(rng, depth_budget - 1));
    case 1:
        return re::endwith(gen_ast(rng, depth_budget - 1));
    case 2:
        return re::contain(gen_ast(rng, depth_budget - 1));
    case 3:
        return re::negation(gen_ast(rng, depth_budget - 1));
    case 4:
        return re::optional(gen_ast(rng, depth_budget - 1));
    case 5:
        return re::star(gen_ast(rng, depth_budget - 1));
    case 6:
        return re::concat(gen_ast(rng, depth_budget - 1), gen_ast(rng, depth_budget - 1));
    case 7:
        return re::conj(gen_ast(rng, depth_budget - 1), gen_ast(rng, depth_budget - 1));
    case 8:
        return re::disj(gen_ast(rng, depth_budget - 1), gen_ast(rng, depth_budget - 1));
    case 9:
        return re::rep(gen_ast(rng, depth_budget - 1), static_cast<int>(rng.below(3)));
    case 10:
        return re::repatleast(gen_ast(rng, depth_budget - 1), static_cast<int>(rng.below(3)));
    case 11: {
        int k1 = static_cast<int>(rng.below(2));
        int k2 = k1 + 1 + static_cast<int>(rng.below(2));
        return re::reprange(gen_ast(rng, depth_budget - 1), k1, k2);
    }
    default: {
        AstPtr inner = rng.chance(0.5) ? gen_class(rng) : re::ch(kGenPool[rng.below(kGenPool.size())]);
        if (inner->cls == CharClass::Any || inner->cls == CharClass::Null)
            inner = re::cls(CharClass::Num);
        return re::notcc(inner);
    }
    }
}

// One randomly chosen language-preserving rewrite applied at the root.
// Returns a tree that prints differently but accepts the same language.
inline AstPtr rewrite_equivalent(Rng& rng, const AstPtr& r) {
    std::vector<AstPtr> options;
    options.push_back(re::negation(re::negation(r)));
    options.push_back(re::conj(r, r));
    options.push_back(re::disj(r, r));
    options.push_back(re::rep(r, 1));
    options.push_back(re::conj(r, re::star(re::cls(CharClass::Any))));
    switch (r->kind) {
    case NodeKind::Optional:
        options.push_back(re::reprange(r->children[0], 0, 1));
        break;
    case NodeKind::Star:
        options.push_back(re::repatleast(r->children[0], 0));
        break;
    case NodeKind::StartWith:
        options.push_back(re::concat(r->children[0], re::star(re::cls(CharClass::Any))));
        break;
    case NodeKind::EndWith:
        options.push_back(re::concat(re::star(re::cls(CharClass::Any)), r->children[0]));
        break;
    case NodeKind::Contain:
        options.push_back(re::concat(
            re::star(re::cls(CharClass::Any)),
            re::concat(r->children[0], re::star(re::cls(CharClass::Any)))));
        break;
    case NodeKind::And:
    case NodeKind::Or: {
        // operands swapped; both operators are commutative
        auto copy = std::make_shared<RegexAst>(*r);
        std::swap(copy->children[0], copy->children[1]);
        options.push_back(copy);
        break;
    }
    default:
        break;
    }
    return options[rng.below(options.size())];
}

} // namespace streg::test
