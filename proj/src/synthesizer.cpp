#include "streg/synthesizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <tuple>

#include "streg/approx.hpp"
#include "streg/dfa.hpp"
#include "streg/dsl.hpp"
#include "streg/errors.hpp"

namespace streg {

namespace {

// Weight of the example-overlap bonus relative to the log-probability term.
constexpr double kOverlapWeight = 1.0;

// Weight of the scorer's consistency-progress term.
constexpr double kProgressWeight = 6.0;

// A hole's sort names the nonterminal it stands for; the tag rides in the
// node's text field, which nothing else uses for holes.
AstPtr sorted_hole(const char* sort) {
    auto n = std::make_shared<RegexAst>();
    n->kind = NodeKind::Hole;
    n->text = sort;
    return n;
}

const char* start_sort(Template t) {
    switch (t) {
    case Template::Intersection: return "int";
    case Template::Concatenation: return "cat";
    case Template::Separation: return "sep";
    }
    throw Error("unknown template");
}

// Leftmost unexpanded slot in token order: holes first, then a node's own
// repetition parameters after its children.
struct Slot {
    std::vector<int> path;
    int which = 0; // 0 = expression hole, 1 = first count, 2 = second count
};

bool leftmost_slot(const AstPtr& a, std::vector<int>& path, Slot& out) {
    if (a->kind == NodeKind::Hole) {
        out = {path, 0};
        return true;
    }
    for (int i = 0; i < static_cast<int>(a->children.size()); ++i) {
        path.push_back(i);
        if (leftmost_slot(a->children[static_cast<std::size_t>(i)], path, out))
            return true;
        path.pop_back();
    }
    int np = count_params(a->kind);
    if (np >= 1 && a->k1 == kCountHole) {
        out = {path, 1};
        return true;
    }
    if (np == 2 && a->k2 == kCountHole) {
        out = {path, 2};
        return true;
    }
    return false;
}

const RegexAst* node_at(const AstPtr& root, const std::vector<int>& path) {
    const RegexAst* n = root.get();
    for (int i : path)
        n = n->children[static_cast<std::size_t>(i)].get();
    return n;
}

// Alternatives sharing a group tag count as one production type when the
// step's log-probability is split, so a long literal menu or a spliced
// sub-grammar does not outvote the structural choices next to it.
struct ProdAlt {
    std::string label;
    AstPtr sub;
    std::string group;
};
using Prods = std::vector<ProdAlt>;

void literal_alts(Prods& out, const TerminalPool& pool) {
    for (const AstPtr& lit : pool.literals) {
        const char* g = lit->kind == NodeKind::ClassTerm ? "g.class"
                        : lit->kind == NodeKind::ConstChar ? "g.char"
                                                           : "g.string";
        out.push_back({"lit." + print_dsl(lit), lit, g});
    }
}

Prods productions(const std::string& sort, const TerminalPool& pool);

void splice(Prods& out, const std::string& sort, const TerminalPool& pool,
            const char* group = nullptr) {
    Prods sub = productions(sort, pool);
    for (ProdAlt& alt : sub) {
        if (group)
            alt.group = group;
        out.push_back(std::move(alt));
    }
}

// The production tables mirror the sampling grammar: constraints under an
// intersection, components under a concatenation, delimiter-joined segments
// under a separation. Unit productions are inlined so every step adds
// structure.
Prods productions(const std::string& sort, const TerminalPool& pool) {
    Prods out;
    auto H = sorted_hole;
    auto own = [&](const char* label, AstPtr sub) { out.push_back({label, std::move(sub), label}); };
    if (sort == "int") {
        splice(out, "cons", pool, "int.single");
        own("int.and", re::conj(H("cons"), H("int")));
    } else if (sort == "cons") {
        own("cons.startwith", re::startwith(H("ce")));
        own("cons.endwith", re::endwith(H("ce")));
        own("cons.contain", re::contain(H("ce")));
        own("cons.not-startwith", re::negation(re::startwith(H("ce"))));
        own("cons.not-endwith", re::negation(re::endwith(H("ce"))));
        own("cons.not-contain", re::negation(re::contain(H("ce"))));
        own("cons.length-exact", re::rep(re::cls(CharClass::Any), kCountHole));
        own("cons.length-min", re::repatleast(re::cls(CharClass::Any), kCountHole));
        own("cons.length-range", re::reprange(re::cls(CharClass::Any), kCountHole, kCountHole));
        own("cons.consist-of", re::repatleast(H("litset"), 1));
    } else if (sort == "ce") { // constraint expression
        literal_alts(out, pool);
        own("ce.rep", re::rep(H("lit"), kCountHole));
        own("ce.concat", re::concat(H("mce"), H("mce")));
        own("ce.or", re::disj(H("lit"), H("litset2")));
    } else if (sort == "mce") { // piece of a two-part constraint expression
        literal_alts(out, pool);
        own("mce.rep", re::rep(H("lit"), kCountHole));
    } else if (sort == "lit") {
        literal_alts(out, pool);
    } else if (sort == "litset") { // one to three literals, kept in menu order
        literal_alts(out, pool);
        own("litset.or", re::disj(H("lit"), H("litset2")));
    } else if (sort == "litset2") {
        literal_alts(out, pool);
        own("litset.or", re::disj(H("lit"), H("lit")));
    } else if (sort == "cat") {
        splice(out, "comp", pool, "cat.single");
        own("cat.concat", re::concat(H("comp"), H("cat")));
    } else if (sort == "comp") {
        literal_alts(out, pool);
        own("comp.or", re::disj(H("lit"), H("litset2")));
        own("comp.rep", re::rep(H("ce2"), kCountHole));
        own("comp.repatleast", re::repatleast(H("ce2"), kCountHole));
        own("comp.reprange", re::reprange(H("ce2"), kCountHole, kCountHole));
        own("comp.optional", re::optional(H("comp")));
        own("comp.or-reps",
            re::disj(re::rep(H("lit"), kCountHole), re::rep(H("lit"), kCountHole)));
    } else if (sort == "ce2") { // component expression
        literal_alts(out, pool);
        own("ce2.or", re::disj(H("lit"), H("litset2")));
    } else if (sort == "sep") {
        std::vector<AstPtr> fixed = {H("seg"), H("delim"), H("seg"), H("delim"), H("seg")};
        own("sep.fixed", chain_build(fixed, NodeKind::Concat));
        std::vector<AstPtr> rolled = {H("seg"), re::star(re::concat(H("delim"), H("seg")))};
        own("sep.star", chain_build(rolled, NodeKind::Concat));
    } else if (sort == "seg") {
        splice(out, "comp", pool, "seg.comp");
        own("seg.concat2", re::concat(H("comp"), H("comp")));
        splice(out, "cons", pool, "seg.cons");
        own("seg.and2", re::conj(H("cons"), H("cons")));
    } else if (sort == "delim") {
        for (const AstPtr& d : pool.delimiters)
            out.push_back({"delim." + print_dsl(d), d, "g.char"});
    } else {
        throw Error("expand: unknown hole sort '" + sort + "'");
    }
    return out;
}

AstPtr with_count(const RegexAst& node, int which, int k) {
    AstPtr child = node.children[0];
    switch (node.kind) {
    case NodeKind::Rep: return re::rep(child, k);
    case NodeKind::RepAtLeast: return re::repatleast(child, k);
    case NodeKind::RepRange:
        return which == 1 ? re::reprange(child, k, node.k2) : re::reprange(child, node.k1, k);
    default: throw Error("count slot on a non-repetition node");
    }
}

// Splices nested chains of the same operator into one right-nested spine.
AstPtr flatten_chains(const AstPtr& a) {
    std::vector<AstPtr> kids;
    kids.reserve(a->children.size());
    for (const AstPtr& c : a->children)
        kids.push_back(flatten_chains(c));
    AstPtr node;
    if (a->children.empty()) {
        node = a;
    } else {
        auto n = std::make_shared<RegexAst>(*a);
        n->children = std::move(kids);
        node = n;
    }
    if (node->kind != NodeKind::Concat && node->kind != NodeKind::And)
        return node;
    std::vector<AstPtr> elems;
    const std::function<void(const AstPtr&)> gather = [&](const AstPtr& n) {
        if (n->kind == node->kind) {
            for (const AstPtr& c : n->children)
                gather(c);
        } else {
            elems.push_back(n);
        }
    };
    gather(node);
    return chain_build(elems, node->kind);
}

bool consistent_regex(const Dfa& d, const std::vector<std::string>& pos,
                      const std::vector<std::string>& neg) {
    for (const std::string& s : pos)
        if (!d.matches(s))
            return false;
    for (const std::string& s : neg)
        if (d.matches(s))
            return false;
    return true;
}

// Sort key: best score first, then smaller tree, then DSL text.
using RankKey = std::tuple<double, int, std::string>;

RankKey rank_key(double score, const AstPtr& a) {
    return {-score, ast_metrics(a).size, print_dsl(a)};
}

void check_alphabet(const std::vector<std::string>& strings, const char* label) {
    for (const std::string& s : strings)
        for (char c : s)
            if (!in_alphabet(c))
                throw Error(std::string(label) + " example contains a character outside the alphabet: '" +
                            std::string(1, c) + "'");
}

} // namespace

TerminalPool pool_from_examples(const SynthesisTask& task) {
    TerminalPool p;
    for (CharClass c : {CharClass::Num, CharClass::Let, CharClass::Low, CharClass::Cap,
                        CharClass::Spec})
        p.literals.push_back(re::cls(c));

    std::array<int, kAlphabetSize> freq{};
    for (const std::vector<std::string>* side : {&task.pos, &task.neg})
        for (const std::string& s : *side)
            for (char c : s) {
                int idx = symbol_index(c);
                if (idx >= 0)
                    ++freq[static_cast<std::size_t>(idx)];
            }
    std::vector<int> seen;
    for (int i = 0; i < kAlphabetSize; ++i)
        if (freq[static_cast<std::size_t>(i)] > 0)
            seen.push_back(i);
    std::stable_sort(seen.begin(), seen.end(), [&](int a, int b) {
        return freq[static_cast<std::size_t>(a)] > freq[static_cast<std::size_t>(b)];
    });
    std::string_view symbols = alphabet_symbols();
    const CharSet specials = char_class_set(CharClass::Spec);
    int kept = 0;
    for (int idx : seen) {
        if (kept >= 8)
            break;
        p.literals.push_back(re::ch(symbols[static_cast<std::size_t>(idx)]));
        ++kept;
    }
    int delims = 0;
    for (int idx : seen) {
        if (delims >= 4)
            break;
        if (!specials.test(static_cast<std::size_t>(idx)))
            continue;
        p.delimiters.push_back(re::ch(symbols[static_cast<std::size_t>(idx)]));
        ++delims;
    }

    // Short strings every positive shares; these catch fixed prefixes and
    // suffixes without opening the door to arbitrary constants.
    if (task.pos.size() >= 2) {
        std::vector<std::string> found;
        for (std::size_t len : {std::size_t{2}, std::size_t{3}}) {
            const std::string& base = task.pos.front();
            if (base.size() < len)
                continue;
            for (std::size_t i = 0; i + len <= base.size() && found.size() < 3; ++i) {
                std::string sub = base.substr(i, len);
                bool ok = true;
                for (char c : sub)
                    ok = ok && in_alphabet(c);
                for (const std::string& s : task.pos)
                    ok = ok && s.find(sub) != std::string::npos;
                if (ok && std::find(found.begin(), found.end(), sub) == found.end())
                    found.push_back(sub);
            }
        }
        for (const std::string& sub : found)
            p.literals.push_back(re::str(sub));
    }

    for (int k = 1; k <= 9; ++k)
        p.counts.push_back(k);
    return p;
}

std::vector<Expansion> expand(const AstPtr& partial, const TerminalPool& pool) {
    std::vector<int> scratch;
    Slot slot;
    if (!leftmost_slot(partial, scratch, slot))
        return {};
    std::vector<Expansion> out;
    if (slot.which == 0) {
        auto is_literal_leaf = [](const RegexAst& n) {
            return n.kind == NodeKind::ClassTerm || n.kind == NodeKind::ConstChar ||
                   n.kind == NodeKind::ConstString;
        };
        // Literal alternatives inside an or-chain must follow the menu order
        // of the element to their left, which rules out permuted and
        // duplicated spellings of the same set; alternatives that subsume or
        // are subsumed by an existing member would be dead weight.
        auto pool_index = [&](const RegexAst& n) {
            for (std::size_t i = 0; i < pool.literals.size(); ++i) {
                const RegexAst& p = *pool.literals[i];
                if (p.kind == n.kind && p.cls == n.cls && p.text == n.text)
                    return static_cast<int>(i);
            }
            return -1;
        };
        int min_lit = 0;
        std::vector<CharSet> members;
        {
            const RegexAst* n = partial.get();
            for (int step : slot.path) {
                if (n->kind == NodeKind::Or && step == 1 && is_literal_leaf(*n->children[0])) {
                    min_lit = std::max(min_lit, pool_index(*n->children[0]) + 1);
                    members.push_back(collect_literal_chars(n->children[0]));
                }
                n = n->children[static_cast<std::size_t>(step)].get();
            }
        }
        const RegexAst* hole = node_at(partial, slot.path);
        Prods alts = productions(hole->text, pool);
        if (min_lit > 0) {
            std::erase_if(alts, [&](const ProdAlt& a) {
                if (!is_literal_leaf(*a.sub))
                    return false;
                if (pool_index(*a.sub) < min_lit)
                    return true;
                CharSet mine = collect_literal_chars(a.sub);
                for (const CharSet& m : members)
                    if ((mine & m) == mine || (mine & m) == m)
                        return true;
                return false;
            });
        }
        std::map<std::string, int> group_size;
        for (const ProdAlt& a : alts)
            ++group_size[a.group];
        double types = static_cast<double>(group_size.size());
        for (ProdAlt& a : alts) {
            double lp = -std::log(types);
            int sz = group_size[a.group];
            if (sz > 1)
                lp -= std::log(static_cast<double>(sz));
            out.push_back({a.label, replace_at(partial, slot.path, a.sub),
                           collect_literal_chars(a.sub), static_cast<int>(types), lp});
        }
        return out;
    }
    const RegexAst* node = node_at(partial, slot.path);
    std::vector<int> menu;
    for (int k : pool.counts) {
        if (node->kind == NodeKind::RepRange) {
            // leave room for the upper bound, or respect a filled one
            if (slot.which == 1 && k >= (node->k2 == kCountHole ? pool.counts.back() : node->k2))
                continue;
            if (slot.which == 2 && k <= node->k1)
                continue;
        }
        menu.push_back(k);
    }
    int n = static_cast<int>(menu.size());
    for (int k : menu) {
        Expansion e;
        e.production = "count." + std::to_string(k);
        e.result = replace_at(partial, slot.path, with_count(*node, slot.which, k));
        e.alternatives = n;
        e.logprob = -std::log(static_cast<double>(std::max(1, n)));
        out.push_back(std::move(e));
    }
    return out;
}

Scorer default_scorer(const SynthesisTask& task) {
    // character classes the positive examples draw from
    std::vector<CharSet> classes;
    CharSet poschars;
    for (const std::string& s : task.pos)
        for (char c : s) {
            int idx = symbol_index(c);
            if (idx >= 0)
                poschars.set(static_cast<std::size_t>(idx));
        }
    for (CharClass c : {CharClass::Num, CharClass::Low, CharClass::Cap, CharClass::Spec}) {
        CharSet s = char_class_set(c);
        if ((s & poschars).any())
            classes.push_back(s);
    }

    // how far a partial regex already is from contradicting the examples:
    // negatives its upper bound rejects, positives its lower bound accepts
    auto cache = std::make_shared<ApproxCache>();
    auto pos = std::make_shared<std::vector<std::string>>(task.pos);
    auto neg = std::make_shared<std::vector<std::string>>(task.neg);
    auto progress = [cache, pos, neg](const AstPtr& a) -> double {
        if (pos->empty() && neg->empty())
            return 0.0;
        double total = static_cast<double>(pos->size() + neg->size());
        try {
            int n = 0;
            Dfa over = over_approx({a, {}}, cache.get());
            for (const std::string& s : *neg)
                n += over.matches(s) ? 0 : 1;
            Dfa under = under_approx({a, {}}, cache.get());
            for (const std::string& s : *pos)
                n += under.matches(s) ? 1 : 0;
            return static_cast<double>(n) / total;
        } catch (const StateLimitError&) {
            return 0.0;
        }
    };

    return [classes, progress](const BeamItem& parent, const Expansion& e) {
        double d = e.logprob;
        if (!classes.empty()) {
            int fresh = 0;
            for (const CharSet& cs : classes)
                if ((cs & parent.mentioned).none() && (cs & e.introduces).any())
                    ++fresh;
            d += kOverlapWeight * static_cast<double>(fresh) /
                 static_cast<double>(classes.size());
        }
        double before = parent.partial ? progress(parent.partial) : 0.0;
        d += kProgressWeight * (progress(e.result) - before);
        return d;
    };
}

std::string_view synth_status_name(SynthStatus s) {
    switch (s) {
    case SynthStatus::Found: return "found";
    case SynthStatus::NoSolution: return "no-solution";
    case SynthStatus::Inconsistent: return "inconsistent";
    }
    return "?";
}

SynthResult synth_beam(const SynthesisTask& task, const Scorer& scorer, const SynthConfig& cfg) {
    if (cfg.beam_width < 1 || cfg.k < 1 || cfg.node_budget < 1 || cfg.prune_stride < 1 ||
        cfg.max_ast_size < 2)
        throw Error("synth_beam: bad configuration");
    if (!scorer)
        throw Error("synth_beam: scorer is empty");
    check_alphabet(task.pos, "positive");
    check_alphabet(task.neg, "negative");

    TerminalPool pool = pool_from_examples(task);
    ApproxCache cache;
    SynthResult res;
    std::map<std::string, std::pair<double, AstPtr>> done; // DSL text -> best completion

    std::vector<Template> templates;
    if (task.hint)
        templates.push_back(*task.hint);
    else
        templates = {Template::Intersection, Template::Concatenation, Template::Separation};

    // Each template gets its own beam so a cheap-looking start in one cannot
    // starve the others; unspent budget rolls over to the next template.
    bool all_exhausted = true;
    int budget_left = cfg.node_budget;
    for (std::size_t ti = 0; ti < templates.size(); ++ti) {
        int share = budget_left / static_cast<int>(templates.size() - ti);
        if (share < 1) {
            all_exhausted = false;
            break;
        }
        int spent = 0;
        bool budget_out = false;
        std::vector<BeamItem> beam = {{sorted_hole(start_sort(templates[ti])), 0.0, {}}};
        int step = 0;
        while (!beam.empty() && !budget_out) {
            ++step;
            bool prune_now = cfg.prune && step % cfg.prune_stride == 0;
            std::vector<std::tuple<RankKey, BeamItem>> next;
            for (const BeamItem& item : beam) {
                if (budget_out)
                    break;
                for (Expansion& e : expand(item.partial, pool)) {
                    if (++spent > share) {
                        budget_out = true;
                        break;
                    }
                    if (ast_metrics(e.result).size > cfg.max_ast_size)
                        continue;
                    double score = item.score + scorer(item, e);
                    CharSet mentioned = item.mentioned | e.introduces;
                    if (!contains_hole(e.result)) {
                        AstPtr full = flatten_chains(e.result);
                        try {
                            Dfa d = compile(full);
                            if (cfg.prune && !consistent_regex(d, task.pos, task.neg))
                                continue;
                        } catch (const StateLimitError&) {
                            continue;
                        }
                        std::string key = print_dsl(full);
                        auto it = done.find(key);
                        if (it == done.end() || score > it->second.first)
                            done[key] = {score, full};
                        continue;
                    }
                    if (prune_now && !feasible({e.result, {}}, task.pos, task.neg, &cache))
                        continue;
                    BeamItem child{std::move(e.result), score, mentioned};
                    next.emplace_back(rank_key(score, child.partial), std::move(child));
                }
            }
            std::sort(next.begin(), next.end(),
                      [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
            if (static_cast<int>(next.size()) > cfg.beam_width) {
                res.beam_overflowed = true;
                next.resize(static_cast<std::size_t>(cfg.beam_width));
            }
            beam.clear();
            beam.reserve(next.size());
            for (auto& [key, item] : next)
                beam.push_back(std::move(item));
            // Completions only pile up past k when the live frontier still
            // outscores the weakest one kept, so stop once it no longer can.
            if (static_cast<int>(done.size()) >= cfg.k && !beam.empty()) {
                std::vector<double> top;
                for (const auto& [key, entry] : done)
                    top.push_back(entry.first);
                std::sort(top.begin(), top.end(), std::greater<>());
                if (beam.front().score < top[static_cast<std::size_t>(cfg.k) - 1])
                    break;
            }
        }
        res.expansions += spent;
        budget_left -= spent;
        if (budget_out || !beam.empty())
            all_exhausted = false;
    }

    std::vector<std::tuple<RankKey, AstPtr>> ranked;
    for (const auto& [key, entry] : done)
        ranked.emplace_back(rank_key(entry.first, entry.second), entry.second);
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    for (auto& [key, ast] : ranked) {
        if (static_cast<int>(res.ranked.size()) >= cfg.k)
            break;
        res.ranked.push_back(ast);
    }

    if (!res.ranked.empty())
        res.status = SynthStatus::Found;
    else if (!all_exhausted || res.beam_overflowed)
        res.status = SynthStatus::NoSolution;
    else
        res.status = SynthStatus::Inconsistent;
    return res;
}

std::optional<AstPtr> filter_kbest(const std::vector<AstPtr>& candidates,
                                   const std::vector<std::string>& pos,
                                   const std::vector<std::string>& neg) {
    for (const AstPtr& cand : candidates) {
        try {
            if (consistent_regex(compile(cand), pos, neg))
                return cand;
        } catch (const Error&) {
            // uncompilable entries (holes, state blowups) cannot be checked
        }
    }
    return std::nullopt;
}

namespace {

bool leads_to(const AstPtr& p, const AstPtr& t) {
    if (p->kind == NodeKind::Hole)
        return true;
    if (t->kind == NodeKind::Hole || p->kind != t->kind)
        return false;
    if (p->kind == NodeKind::ClassTerm && p->cls != t->cls)
        return false;
    if ((p->kind == NodeKind::ConstChar || p->kind == NodeKind::ConstString) && p->text != t->text)
        return false;
    int np = count_params(p->kind);
    if (np >= 1 && p->k1 != kCountHole && p->k1 != t->k1)
        return false;
    if (np == 2 && p->k2 != kCountHole && p->k2 != t->k2)
        return false;
    if (p->children.size() != t->children.size())
        return false;
    for (std::size_t i = 0; i < p->children.size(); ++i)
        if (!leads_to(p->children[i], t->children[i]))
            return false;
    return true;
}

bool derive_rec(const AstPtr& cur, const AstPtr& truth, const TerminalPool& pool,
                std::vector<DerivationStep>& path) {
    if (!contains_hole(cur))
        return ast_equal(cur, truth);
    for (Expansion& e : expand(cur, pool)) {
        if (!leads_to(e.result, truth))
            continue;
        AstPtr result = e.result;
        path.push_back({cur, std::move(e)});
        if (derive_rec(result, truth, pool, path))
            return true;
        path.pop_back();
    }
    return false;
}

} // namespace

std::vector<DerivationStep> derivation_path(const AstPtr& truth, Template tpl,
                                            const TerminalPool& pool) {
    if (!truth)
        throw Error("derivation_path: null regex");
    if (contains_hole(truth))
        throw Error("derivation_path: tree still has holes");
    std::vector<DerivationStep> path;
    if (!derive_rec(sorted_hole(start_sort(tpl)), truth, pool, path))
        throw Error("derivation_path: not reachable in the search grammar: " + print_dsl(truth));
    return path;
}

double score_path(const std::vector<DerivationStep>& path, const Scorer& scorer) {
    if (!scorer)
        throw Error("score_path: scorer is empty");
    BeamItem item;
    for (const DerivationStep& st : path) {
        item.partial = st.partial;
        item.score += scorer(item, st.taken);
        item.mentioned |= st.taken.introduces;
    }
    return item.score;
}

EvalReport evaluate(const std::vector<std::vector<AstPtr>>& predictions,
                    const std::vector<AstPtr>& gold, const std::vector<SynthesisTask>& tasks) {
    if (predictions.size() != gold.size() || gold.size() != tasks.size())
        throw Error("evaluate: predictions, gold and tasks must align");
    EvalReport report;
    int n_acc = 0, n_equiv = 0, n_cons = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        Dfa g = compile(gold[i]);
        TaskOutcome out;
        for (std::size_t j = 0; j < predictions[i].size(); ++j) {
            Dfa d;
            try {
                d = compile(predictions[i][j]);
            } catch (const Error&) {
                continue;
            }
            bool eqv = equivalent(d, g);
            if (eqv && j == 0)
                out.equiv_at_1 = true;
            out.equiv_in_k = out.equiv_in_k || eqv;
            out.consistent_in_k =
                out.consistent_in_k || consistent_regex(d, tasks[i].pos, tasks[i].neg);
        }
        n_acc += out.equiv_at_1 ? 1 : 0;
        n_equiv += out.equiv_in_k ? 1 : 0;
        n_cons += out.consistent_in_k ? 1 : 0;
        report.tasks.push_back(out);
    }
    if (!report.tasks.empty()) {
        double total = static_cast<double>(report.tasks.size());
        report.acc_pct = 100.0 * n_acc / total;
        report.equiv_found_pct = 100.0 * n_equiv / total;
        report.consistent_found_pct = 100.0 * n_cons / total;
    }
    return report;
}

std::string format_report(const EvalReport& report) {
    int total = static_cast<int>(report.tasks.size());
    auto count = [&](bool TaskOutcome::* field) {
        int n = 0;
        for (const TaskOutcome& t : report.tasks)
            n += t.*field ? 1 : 0;
        return n;
    };
    char line[96];
    std::string out = "tasks evaluated: " + std::to_string(total) + "\n";
    std::snprintf(line, sizeof line, "%-22s %6.1f%%  (%d/%d)\n", "rank-1 equivalent",
                  report.acc_pct, count(&TaskOutcome::equiv_at_1), total);
    out += line;
    std::snprintf(line, sizeof line, "%-22s %6.1f%%  (%d/%d)\n", "equivalent in list",
                  report.equiv_found_pct, count(&TaskOutcome::equiv_in_k), total);
    out += line;
    std::snprintf(line, sizeof line, "%-22s %6.1f%%  (%d/%d)\n", "consistent in list",
                  report.consistent_found_pct, count(&TaskOutcome::consistent_in_k), total);
    out += line;
    return out;
}

std::vector<std::vector<AstPtr>> load_predictions(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open prediction file: " + path);
    std::vector<std::vector<AstPtr>> result;
    std::optional<std::vector<AstPtr>> block;
    bool block_is_dash = false;
    std::string line;
    std::size_t line_no = 0;
    auto close = [&] {
        if (block) {
            result.push_back(std::move(*block));
            block.reset();
            block_is_dash = false;
        }
    };
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) {
            close();
            continue;
        }
        if (block_is_dash)
            throw SchemaError("'-' must be the only line of its block", line_no);
        if (!block)
            block.emplace();
        if (line == "-") {
            if (!block->empty())
                throw SchemaError("'-' must be the only line of its block", line_no);
            block_is_dash = true;
            continue;
        }
        AstPtr ast;
        try {
            ast = parse_dsl(line);
        } catch (const Error& e) {
            throw SchemaError(std::string("bad regex: ") + e.what(), line_no);
        }
        if (contains_hole(ast))
            throw SchemaError("partial regex not allowed in predictions", line_no);
        block->push_back(std::move(ast));
    }
    close();
    return result;
}

void save_predictions(const std::string& path, const std::vector<std::vector<AstPtr>>& preds) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write prediction file: " + path);
    for (std::size_t i = 0; i < preds.size(); ++i) {
        if (i > 0)
            out << "\n";
        if (preds[i].empty()) {
            out << "-\n";
            continue;
        }
        for (const AstPtr& a : preds[i])
            out << print_dsl(a) << "\n";
    }
    if (!out)
        throw Error("cannot write prediction file: " + path);
}

} // namespace streg
