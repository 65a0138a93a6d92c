#include "streg/examples.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string_view>

#include "streg/alphabet.hpp"
#include "streg/dfa.hpp"
#include "streg/errors.hpp"
#include "streg/shape.hpp"

namespace streg {

std::string_view perturb_kind_name(PerturbKind k) {
    switch (k) {
    case PerturbKind::ClassSwap: return "class-swap";
    case PerturbKind::ParameterShift: return "parameter-shift";
    case PerturbKind::NegationFlip: return "constraint-negation-flip";
    case PerturbKind::ComponentDrop: return "component-drop";
    case PerturbKind::ComponentDuplicate: return "component-duplicate";
    case PerturbKind::ConstantSwap: return "constant-swap";
    case PerturbKind::OptionalityToggle: return "optionality-toggle";
    }
    return "?";
}

std::string perturbation_tag(const Perturbation& p) {
    std::string tag{perturb_kind_name(p.kind)};
    if (!p.path.empty()) {
        tag += ':';
        for (std::size_t i = 0; i < p.path.size(); ++i) {
            if (i) tag += '.';
            tag += std::to_string(p.path[i]);
        }
    }
    return tag;
}

namespace {

// Block a concrete symbol belongs to, for same-class constant swaps.
CharClass block_of(char c) {
    for (CharClass cls : {CharClass::Cap, CharClass::Low, CharClass::Num, CharClass::Spec})
        if (char_class_set(cls).test(static_cast<std::size_t>(symbol_index(c))))
            return cls;
    return CharClass::Any; // unreachable for alphabet symbols
}

char swap_char(char c, Rng& rng) {
    std::string_view block = char_class_chars(block_of(c));
    char r = c;
    while (r == c) r = block[rng.below(block.size())];
    return r;
}

AstPtr shifted_rep(const AstPtr& node, int k) {
    return node->kind == NodeKind::Rep ? re::rep(node->children[0], k)
                                       : re::repatleast(node->children[0], k);
}

using RawCandidate = std::pair<Perturbation, AstPtr>;

std::vector<RawCandidate> raw_candidates(const AstPtr& ast, Rng& rng) {
    std::vector<std::pair<AstPtr, std::vector<int>>> nodes;
    visit_ast(ast, [&](const AstPtr& n, const std::vector<int>& path) {
        nodes.emplace_back(n, path);
    });
    std::map<std::vector<int>, NodeKind> kind_at;
    for (const auto& [n, path] : nodes) kind_at[path] = n->kind;
    auto parent_is = [&](const std::vector<int>& path, NodeKind k) {
        if (path.empty()) return false;
        auto up = path;
        up.pop_back();
        return kind_at.at(up) == k;
    };

    std::vector<RawCandidate> out;
    auto add = [&](const std::vector<int>& path, PerturbKind kind, AstPtr replacement) {
        if (!replacement) return;
        try {
            out.push_back({{path, kind}, replace_at(ast, path, std::move(replacement))});
        } catch (const Error&) {
            // a factory refused the mutated shape; skip the candidate
        }
    };

    for (const auto& [node, path] : nodes) {
        switch (node->kind) {
        case NodeKind::ClassTerm: {
            // fixed neighbor cycle keeps the mutation deterministic
            static constexpr std::pair<CharClass, CharClass> kSwap[] = {
                {CharClass::Num, CharClass::Let}, {CharClass::Let, CharClass::Low},
                {CharClass::Low, CharClass::Cap}, {CharClass::Cap, CharClass::Spec},
                {CharClass::Spec, CharClass::Num}};
            for (auto [from, to] : kSwap)
                if (node->cls == from) add(path, PerturbKind::ClassSwap, re::cls(to));
            break;
        }
        case NodeKind::ConstChar:
            add(path, PerturbKind::ConstantSwap, re::ch(swap_char(node->text[0], rng)));
            break;
        case NodeKind::ConstString: {
            std::string s = node->text;
            std::size_t pos = rng.below(s.size());
            s[pos] = swap_char(s[pos], rng);
            add(path, PerturbKind::ConstantSwap, re::str(s));
            break;
        }
        case NodeKind::Rep:
        case NodeKind::RepAtLeast:
            if (node->k1 > 0)
                add(path, PerturbKind::ParameterShift, shifted_rep(node, node->k1 - 1));
            add(path, PerturbKind::ParameterShift, shifted_rep(node, node->k1 + 1));
            break;
        case NodeKind::RepRange: {
            const AstPtr& c = node->children[0];
            if (node->k1 > 0)
                add(path, PerturbKind::ParameterShift, re::reprange(c, node->k1 - 1, node->k2));
            if (node->k1 + 1 < node->k2)
                add(path, PerturbKind::ParameterShift, re::reprange(c, node->k1 + 1, node->k2));
            if (node->k2 - 1 > node->k1)
                add(path, PerturbKind::ParameterShift, re::reprange(c, node->k1, node->k2 - 1));
            add(path, PerturbKind::ParameterShift, re::reprange(c, node->k1, node->k2 + 1));
            break;
        }
        case NodeKind::Not:
            add(path, PerturbKind::NegationFlip, node->children[0]);
            break;
        case NodeKind::StartWith:
        case NodeKind::EndWith:
        case NodeKind::Contain:
            // wrapping under an enclosing not() would just cancel out
            if (!parent_is(path, NodeKind::Not))
                add(path, PerturbKind::NegationFlip, re::negation(node));
            break;
        case NodeKind::Optional:
            add(path, PerturbKind::OptionalityToggle, node->children[0]);
            break;
        case NodeKind::Concat: {
            if (parent_is(path, NodeKind::Concat)) break; // chain handled at its root
            std::vector<AstPtr> elems = chain_elements(node, NodeKind::Concat);
            for (std::size_t i = 0; i < elems.size(); ++i) {
                std::vector<AstPtr> dropped;
                for (std::size_t j = 0; j < elems.size(); ++j)
                    if (j != i) dropped.push_back(elems[j]);
                add(path, PerturbKind::ComponentDrop, chain_build(dropped, NodeKind::Concat));

                std::vector<AstPtr> doubled = elems;
                doubled.insert(doubled.begin() + static_cast<std::ptrdiff_t>(i), elems[i]);
                add(path, PerturbKind::ComponentDuplicate, chain_build(doubled, NodeKind::Concat));

                if (elems[i]->kind != NodeKind::Optional) {
                    std::vector<AstPtr> wrapped = elems;
                    wrapped[i] = re::optional(elems[i]);
                    add(path, PerturbKind::OptionalityToggle, chain_build(wrapped, NodeKind::Concat));
                }
            }
            break;
        }
        case NodeKind::And: {
            if (parent_is(path, NodeKind::And)) break;
            std::vector<AstPtr> elems = chain_elements(node, NodeKind::And);
            for (std::size_t i = 0; i < elems.size(); ++i) {
                std::vector<AstPtr> dropped;
                for (std::size_t j = 0; j < elems.size(); ++j)
                    if (j != i) dropped.push_back(elems[j]);
                add(path, PerturbKind::ComponentDrop, chain_build(dropped, NodeKind::And));
            }
            break;
        }
        default:
            break; // Or, Star, NotCc and friends mutate only through their leaves
        }
    }

    // a lone component at the root can still gain an optional wrapper
    if (ast->kind != NodeKind::Concat && ast->kind != NodeKind::Optional && is_component(ast))
        add({}, PerturbKind::OptionalityToggle, re::optional(ast));

    return out;
}

struct ViablePerturbation {
    Perturbation pert;
    AstPtr ast;
    Dfa diff; // perturbed language minus the original
    bool superset;
};

std::vector<ViablePerturbation> viable_perturbations(const AstPtr& ast, const Dfa& orig,
                                                     Rng& rng) {
    Dfa rejects = complement(orig);
    std::vector<ViablePerturbation> out;
    for (auto& [pert, cand] : raw_candidates(ast, rng)) {
        try {
            Dfa cd = compile(cand);
            Dfa diff = intersect(cd, rejects);
            if (is_empty(diff)) continue; // indistinguishable from the original
            bool superset = is_empty(difference(orig, cd));
            out.push_back({pert, cand, std::move(diff), superset});
        } catch (const StateLimitError&) {
            // blown-up product automaton; drop the candidate
        }
    }
    // supersets first: they still accept every positive, so their negatives
    // are the strings that pin down the original
    std::stable_sort(out.begin(), out.end(),
                     [](const ViablePerturbation& a, const ViablePerturbation& b) {
                         return a.superset && !b.superset;
                     });
    return out;
}

std::string random_string(int len, Rng& rng) {
    std::string_view sigma = alphabet_symbols();
    std::string s;
    s.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) s += sigma[rng.below(sigma.size())];
    return s;
}

} // namespace

std::vector<std::pair<Perturbation, AstPtr>> perturb(const AstPtr& ast, Rng& rng) {
    Dfa orig = compile(ast);
    std::vector<std::pair<Perturbation, AstPtr>> out;
    for (auto& v : viable_perturbations(ast, orig, rng))
        out.emplace_back(std::move(v.pert), std::move(v.ast));
    return out;
}

PositiveSet gen_positive(const AstPtr& ast, const ExampleConfig& cfg, Rng& rng) {
    Dfa d = compile(ast);
    int lo = shortest_accepted_length(d);
    if (lo < 0) throw SampleWindowError("positive examples need a non-empty language");
    int hi = lo + cfg.window_slack;

    PositiveSet out;
    std::set<std::string> seen;
    auto push = [&](std::string s) {
        if (seen.insert(s).second)
            out.examples.push_back({std::move(s), true, "traversal"});
    };

    double population = count_accepted(d, lo, hi);
    if (population < cfg.count) {
        // the whole window fits; no shorter strings exist, so take everything
        for (std::string& s : enumerate_accepted(d, hi, static_cast<std::size_t>(cfg.count)))
            push(std::move(s));
    } else {
        CoverageState cov;
        int attempts = cfg.attempts_per_string * cfg.count;
        while (static_cast<int>(out.examples.size()) < cfg.count && attempts-- > 0)
            push(sample_accepted(d, rng, lo, hi, &cov));
        if (static_cast<int>(out.examples.size()) < cfg.count) {
            // the sampler kept colliding; top up from the enumeration order
            std::size_t limit = seen.size() + static_cast<std::size_t>(cfg.count);
            for (std::string& s : enumerate_accepted(d, hi, limit)) {
                if (static_cast<int>(out.examples.size()) >= cfg.count) break;
                push(std::move(s));
            }
        }
    }
    out.shortfall = static_cast<int>(out.examples.size()) < cfg.count;
    return out;
}

NegativeSet gen_negative(const AstPtr& ast, const ExampleConfig& cfg, Rng& rng) {
    Dfa orig = compile(ast);
    int oshort = shortest_accepted_length(orig);
    if (oshort < 0) throw SampleWindowError("negative examples need a non-empty language");

    NegativeSet out;
    if (is_universal(orig)) {
        out.shortfall = cfg.count > 0; // nothing to reject
        return out;
    }

    std::set<std::string> seen;

    struct Source {
        ViablePerturbation v;
        int lo, hi;
        CoverageState cov;
        bool dead = false;
    };
    std::vector<Source> sources;
    for (auto& v : viable_perturbations(ast, orig, rng)) {
        int lo = shortest_accepted_length(v.diff);
        sources.push_back({std::move(v), lo, lo + cfg.window_slack, {}, false});
    }

    std::size_t alive = sources.size();
    while (static_cast<int>(out.examples.size()) < cfg.count && alive > 0) {
        for (Source& src : sources) {
            if (static_cast<int>(out.examples.size()) >= cfg.count) break;
            if (src.dead) continue;
            bool got = false;
            for (int a = 0; a < cfg.attempts_per_string && !got; ++a) {
                std::string s = sample_accepted(src.v.diff, rng, src.lo, src.hi, &src.cov);
                if (seen.insert(s).second) {
                    out.examples.push_back({std::move(s), false, perturbation_tag(src.v.pert)});
                    got = true;
                }
            }
            if (!got) {
                src.dead = true;
                --alive;
            }
        }
    }

    if (static_cast<int>(out.examples.size()) < cfg.count) {
        // pad with uniform rejected strings from the original's length window
        int deficit = cfg.count - static_cast<int>(out.examples.size());
        int attempts = cfg.attempts_per_string * deficit * 4;
        while (static_cast<int>(out.examples.size()) < cfg.count && attempts-- > 0) {
            std::string s = random_string(rng.range(oshort, oshort + cfg.window_slack), rng);
            if (!orig.matches(s) && seen.insert(s).second)
                out.examples.push_back({std::move(s), false, "fallback"});
        }
    }
    out.shortfall = static_cast<int>(out.examples.size()) < cfg.count;
    return out;
}

} // namespace streg
