#include "streg/grammar.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "streg/dfa.hpp"
#include "streg/dsl.hpp"

namespace streg {

double GrammarConfig::weight(const std::string& key) const {
    auto it = weights.find(key);
    return it == weights.end() ? 1.0 : it->second;
}

void GrammarConfig::validate() const {
    if (copy_boost <= 0)
        throw Error("grammar config: copy_boost must be positive");
    if (complexity_cap < 1)
        throw Error("grammar config: complexity_cap must be >= 1");
    if (cons_depth_cap < 1 || comp_depth_cap < 1)
        throw Error("grammar config: depth caps must be >= 1");
    if (budget < 1)
        throw Error("grammar config: budget must be >= 1");
    if (backtrack_limit < 1)
        throw Error("grammar config: backtrack_limit must be >= 1");
    if (recursion_decay <= 0.0 || recursion_decay > 1.0)
        throw Error("grammar config: recursion_decay must be in (0,1]");
    if (min_parts < 1 || max_parts < min_parts)
        throw Error("grammar config: need 1 <= min_parts <= max_parts");
    if (star_prob < 0.0 || star_prob > 1.0)
        throw Error("grammar config: star_prob must be in [0,1]");
    for (const auto& [key, value] : weights)
        if (value <= 0.0)
            throw Error("grammar config: weight " + key + " must be positive");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view text, int line_no) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(std::string(text), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size())
        throw Error("grammar config line " + std::to_string(line_no) + ": bad number '" +
                    std::string(text) + "'");
    return value;
}

int parse_int_field(std::string_view text, int line_no) {
    double v = parse_number(text, line_no);
    int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw Error("grammar config line " + std::to_string(line_no) + ": expected an integer, got '" +
                    std::string(text) + "'");
    return i;
}

} // namespace

GrammarConfig parse_grammar_config(std::string_view text) {
    GrammarConfig cfg;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw Error("grammar config line " + std::to_string(line_no) + ": expected key = value");
        std::string key{trim(line.substr(0, eq))};
        std::string_view value = trim(line.substr(eq + 1));

        if (key == "seed")
            cfg.seed = static_cast<std::uint64_t>(parse_number(value, line_no));
        else if (key == "copy_boost")
            cfg.copy_boost = parse_number(value, line_no);
        else if (key == "complexity_cap")
            cfg.complexity_cap = parse_int_field(value, line_no);
        else if (key == "cons_depth_cap")
            cfg.cons_depth_cap = parse_int_field(value, line_no);
        else if (key == "comp_depth_cap")
            cfg.comp_depth_cap = parse_int_field(value, line_no);
        else if (key == "budget")
            cfg.budget = parse_int_field(value, line_no);
        else if (key == "backtrack_limit")
            cfg.backtrack_limit = parse_int_field(value, line_no);
        else if (key == "recursion_decay")
            cfg.recursion_decay = parse_number(value, line_no);
        else if (key == "min_parts")
            cfg.min_parts = parse_int_field(value, line_no);
        else if (key == "max_parts")
            cfg.max_parts = parse_int_field(value, line_no);
        else if (key == "star_prob")
            cfg.star_prob = parse_number(value, line_no);
        else if (key.starts_with("weight."))
            cfg.weights[key.substr(7)] = parse_number(value, line_no);
        else
            throw Error("grammar config line " + std::to_string(line_no) + ": unknown key '" + key +
                        "'");
    }
    cfg.validate();
    return cfg;
}

GrammarConfig load_grammar_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open grammar config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grammar_config(buf.str());
}

std::vector<double> adapt_weights(const DerivationState& state,
                                  std::span<const ProductionChoice> choices,
                                  const GrammarConfig& cfg) {
    if (choices.empty())
        throw DeadEndError("no productions to choose from");
    CharSet avail;
    avail.set();
    if (state.allowed)
        avail &= *state.allowed;
    avail &= ~state.banned;

    std::vector<double> w(choices.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < choices.size(); ++i) {
        const ProductionChoice& c = choices[i];
        double wi = cfg.weight(c.name);
        if (c.pooled)
            wi *= cfg.copy_boost;
        if (c.introduces.any() && (c.introduces & ~avail).any())
            wi = 0.0; // would mention a symbol outside the current budget
        if (c.draws_from.any() && (c.draws_from & avail).none())
            wi = 0.0; // nothing left to draw from
        w[i] = wi;
        total += wi;
    }
    if (total <= 0.0)
        throw DeadEndError("every production at this choice point is blocked");
    for (double& wi : w)
        wi /= total;
    return w;
}

namespace {

constexpr CharClass kLiteralClasses[] = {CharClass::Num, CharClass::Let, CharClass::Low,
                                         CharClass::Cap, CharClass::Spec};

CharSet full_set() {
    CharSet s;
    s.set();
    return s;
}

struct Sampler {
    const GrammarConfig& cfg;
    Rng& rng;
    DerivationState st;

    CharSet avail() const {
        CharSet a = full_set();
        if (st.allowed)
            a &= *st.allowed;
        a &= ~st.banned;
        return a;
    }

    template <class F>
    auto retry(F&& fn) -> decltype(fn()) {
        for (int i = 0;; ++i) {
            try {
                return fn();
            } catch (const DeadEndError&) {
                if (i + 1 >= cfg.backtrack_limit)
                    throw;
            }
        }
    }

    std::size_t pick(const std::vector<ProductionChoice>& choices) {
        std::vector<double> w = adapt_weights(st, choices, cfg);
        return rng.pick_weighted(w);
    }

    int small_k() { return rng.range(1, 6); }

    std::pair<int, int> span_k() {
        int k1 = rng.range(1, 4);
        return {k1, rng.range(k1 + 1, 9)};
    }

    char draw_char(const CharSet& from) {
        std::string pool = charset_to_string(from);
        if (pool.empty())
            throw DeadEndError("no symbols available for a constant");
        return pool[rng.below(pool.size())];
    }

    bool class_fits(CharClass c, const CharSet& a) const {
        return (char_class_set(c) & ~a).none();
    }

    bool any_class_fits(const CharSet& a) const {
        return std::any_of(std::begin(kLiteralClasses), std::end(kLiteralClasses),
                           [&](CharClass c) { return class_fits(c, a); });
    }

    AstPtr sample_class() {
        std::vector<ProductionChoice> choices;
        for (CharClass c : kLiteralClasses)
            choices.push_back({"class." + std::string(char_class_name(c)), nullptr,
                               char_class_set(c), {}});
        return re::cls(kLiteralClasses[pick(choices)]);
    }

    AstPtr sample_const_char() { return re::ch(draw_char(avail())); }

    AstPtr sample_const_string() {
        CharSet a = avail();
        int len = rng.range(2, 3);
        std::string s;
        for (int i = 0; i < len; ++i)
            s += draw_char(a);
        return re::str(s);
    }

    AstPtr sample_literal() {
        std::vector<ProductionChoice> choices;
        bool with_class = any_class_fits(avail());
        if (with_class)
            choices.push_back({"literal.class", nullptr, {}, {}});
        choices.push_back({"literal.const_char", nullptr, {}, full_set()});
        choices.push_back({"literal.const_string", nullptr, {}, full_set()});
        std::size_t i = pick(choices);
        if (with_class) {
            if (i == 0)
                return sample_class();
            --i;
        }
        return i == 0 ? sample_const_char() : sample_const_string();
    }

    double extend_prob() const {
        double e = cfg.weight("literal_set.extend");
        double s = cfg.weight("literal_set.stop");
        return e / (e + s);
    }

    AstPtr sample_literal_set(int min_members, int max_members) {
        int count = min_members;
        while (count < max_members && rng.chance(extend_prob()))
            ++count;
        std::vector<AstPtr> members;
        std::set<std::string> seen;
        for (int i = 0; i < count; ++i)
            members.push_back(retry([&] {
                AstPtr lit = sample_literal();
                if (!seen.insert(print_dsl(lit)).second)
                    throw DeadEndError("duplicate alternative in a literal set");
                return lit;
            }));
        return chain_build(members, NodeKind::Or);
    }

    // ── constraints ─────────────────────────────────────────────────────────

    AstPtr sample_min_cons_expr() {
        std::vector<ProductionChoice> choices{{"min_cons_expr.literal", nullptr, {}, full_set()},
                                              {"min_cons_expr.rep", nullptr, {}, full_set()}};
        if (pick(choices) == 0)
            return sample_literal();
        return re::rep(sample_literal(), small_k());
    }

    AstPtr sample_cons_expr() {
        std::vector<ProductionChoice> choices{{"cons_expr.literal_set", nullptr, {}, full_set()},
                                              {"cons_expr.min", nullptr, {}, full_set()},
                                              {"cons_expr.concat", nullptr, {}, full_set()}};
        switch (pick(choices)) {
        case 0: return sample_literal_set(2, 3);
        case 1: return sample_min_cons_expr();
        default: return re::concat(sample_min_cons_expr(), sample_min_cons_expr());
        }
    }

    AstPtr sample_basic_cons(int neg_depth = 0) {
        std::vector<ProductionChoice> choices{{"basic_cons.startwith", nullptr, {}, full_set()},
                                              {"basic_cons.endwith", nullptr, {}, full_set()},
                                              {"basic_cons.contain", nullptr, {}, full_set()}};
        if (neg_depth < 2)
            choices.push_back({"basic_cons.not", nullptr, {}, full_set()});
        switch (pick(choices)) {
        case 0: return re::startwith(sample_cons_expr());
        case 1: return re::endwith(sample_cons_expr());
        case 2: return re::contain(sample_cons_expr());
        default: return re::negation(sample_basic_cons(neg_depth + 1));
        }
    }

    AstPtr sample_length() {
        std::vector<ProductionChoice> choices{{"length_cons.rep", nullptr, {}, {}},
                                              {"length_cons.repatleast", nullptr, {}, {}},
                                              {"length_cons.reprange", nullptr, {}, {}}};
        switch (pick(choices)) {
        case 0: return re::rep(re::cls(CharClass::Any), small_k());
        case 1: return re::repatleast(re::cls(CharClass::Any), small_k());
        default: {
            auto [k1, k2] = span_k();
            return re::reprange(re::cls(CharClass::Any), k1, k2);
        }
        }
    }

    AstPtr sample_consist_of() { return re::repatleast(sample_literal_set(1, 3), 1); }

    AstPtr make_anchor(NodeKind dir, AstPtr x) {
        return dir == NodeKind::StartWith ? re::startwith(std::move(x))
                                          : re::endwith(std::move(x));
    }

    // startwith(class) minus a narrower startwith: the excluded side is a
    // strict sub-language so the conjunction stays satisfiable
    AstPtr sample_adv(NodeKind dir) {
        CharSet a = avail();
        std::vector<CharClass> fits;
        for (CharClass c : kLiteralClasses)
            if (class_fits(c, a))
                fits.push_back(c);
        if (fits.empty())
            throw DeadEndError("no character class fits the current budget");
        CharClass base = fits[rng.below(fits.size())];
        AstPtr excluded;
        if (base == CharClass::Let) {
            switch (rng.below(3)) {
            case 0: excluded = re::cls(CharClass::Cap); break;
            case 1: excluded = re::cls(CharClass::Low); break;
            default: excluded = re::ch(draw_char(char_class_set(base)));
            }
        } else {
            excluded = re::ch(draw_char(char_class_set(base)));
        }
        return re::conj(make_anchor(dir, re::cls(base)),
                        re::negation(make_anchor(dir, excluded)));
    }

    AstPtr sample_cond_contain() {
        AstPtr lead = sample_literal();
        AstPtr veto;
        if (any_class_fits(avail()) && rng.chance(0.5))
            veto = sample_class();
        else
            veto = re::ch(draw_char(avail()));
        AstPtr body = rng.chance(0.5) ? re::concat(lead, re::notcc(veto))
                                      : re::concat(re::notcc(veto), lead);
        return re::negation(re::contain(body));
    }

    AstPtr sample_cons() {
        std::vector<ProductionChoice> choices;
        std::vector<AstPtr> replayable;
        for (const AstPtr& p : st.pool)
            if (is_constraint(p)) {
                choices.push_back({"copy", p, collect_literal_chars(p), {}});
                replayable.push_back(p);
            }
        choices.push_back({"cons.basic", nullptr, {}, full_set()});
        choices.push_back({"cons.length", nullptr, {}, {}});
        choices.push_back({"cons.consist_of", nullptr, {}, full_set()});
        choices.push_back({"cons.adv_startwith", nullptr, {}, full_set()});
        choices.push_back({"cons.adv_endwith", nullptr, {}, full_set()});
        choices.push_back({"cons.cond_contain", nullptr, {}, full_set()});
        std::size_t i = pick(choices);
        if (i < replayable.size())
            return replayable[i];
        switch (i - replayable.size()) {
        case 0: return sample_basic_cons();
        case 1: return sample_length();
        case 2: return sample_consist_of();
        case 3: return sample_adv(NodeKind::StartWith);
        case 4: return sample_adv(NodeKind::EndWith);
        default: return sample_cond_contain();
        }
    }

    // ── components ──────────────────────────────────────────────────────────

    AstPtr sample_comp_expr(int max_set) {
        std::vector<ProductionChoice> choices{{"comp_expr.literal", nullptr, {}, full_set()},
                                              {"comp_expr.literal_set", nullptr, {}, full_set()}};
        if (pick(choices) == 0)
            return sample_literal();
        return sample_literal_set(2, max_set);
    }

    AstPtr sample_basic_comp() {
        std::vector<ProductionChoice> choices{{"basic_comp.plain", nullptr, {}, full_set()},
                                              {"basic_comp.rep", nullptr, {}, full_set()},
                                              {"basic_comp.repatleast", nullptr, {}, full_set()},
                                              {"basic_comp.reprange", nullptr, {}, full_set()}};
        switch (pick(choices)) {
        case 0: return sample_comp_expr(3);
        case 1: return re::rep(sample_comp_expr(2), small_k());
        case 2: return re::repatleast(sample_comp_expr(2), small_k());
        default: {
            auto [k1, k2] = span_k();
            return re::reprange(sample_comp_expr(2), k1, k2);
        }
        }
    }

    AstPtr sample_macro_comp() {
        std::vector<ProductionChoice> choices{{"macro_comp.rep", nullptr, {}, full_set()},
                                              {"macro_comp.repatleast", nullptr, {}, full_set()},
                                              {"macro_comp.reprange", nullptr, {}, full_set()}};
        std::size_t kind = pick(choices);
        AstPtr first = sample_literal();
        AstPtr second = retry([&] {
            AstPtr lit = sample_literal();
            if (print_dsl(lit) == print_dsl(first))
                throw DeadEndError("macro alternatives must differ");
            return lit;
        });
        switch (kind) {
        case 0: return re::disj(re::rep(first, small_k()), re::rep(second, small_k()));
        case 1:
            return re::disj(re::repatleast(first, small_k()), re::repatleast(second, small_k()));
        default: {
            auto [a1, a2] = span_k();
            auto [b1, b2] = span_k();
            return re::disj(re::reprange(first, a1, a2), re::reprange(second, b1, b2));
        }
        }
    }

    AstPtr sample_comp() {
        std::vector<ProductionChoice> choices;
        std::vector<AstPtr> replayable;
        for (const AstPtr& p : st.pool)
            if (is_component(p)) {
                choices.push_back({"copy", p, collect_literal_chars(p), {}});
                replayable.push_back(p);
            }
        choices.push_back({"comp.basic", nullptr, {}, full_set()});
        choices.push_back({"comp.macro", nullptr, {}, full_set()});
        choices.push_back({"comp.optional", nullptr, {}, full_set()});
        std::size_t i = pick(choices);
        if (i < replayable.size())
            return replayable[i];
        switch (i - replayable.size()) {
        case 0: return sample_basic_comp();
        case 1: return sample_macro_comp();
        default: return re::optional(sample_comp());
        }
    }

    // ── templates ───────────────────────────────────────────────────────────

    int part_count(int lo, int hi) {
        std::vector<double> w;
        double cur = 1.0;
        for (int m = lo; m <= hi; ++m) {
            w.push_back(cur);
            cur *= cfg.recursion_decay;
        }
        return lo + static_cast<int>(rng.pick_weighted(w));
    }

    AstPtr sample_int(int lo, int hi) {
        int count = part_count(lo, hi);
        std::optional<CharSet> saved = st.allowed;
        std::vector<AstPtr> parts;
        for (int i = 0; i < count; ++i) {
            AstPtr part = retry([&] {
                AstPtr cand = sample_cons();
                for (const AstPtr& prev : parts)
                    if (ast_equal(prev, cand))
                        throw DeadEndError("conjunct repeated verbatim");
                ConsKind kind = constraint_kind(cand).value();
                if (!cons_kind_is_macro(kind) &&
                    ast_metrics(cand).depth > cfg.cons_depth_cap)
                    throw DeadEndError("constraint too deep");
                if (kind == ConsKind::ConsistOf) {
                    // everything already placed must live inside the new budget
                    CharSet budget = collect_literal_chars(cand->children[0]);
                    CharSet earlier;
                    for (const AstPtr& prev : parts)
                        earlier |= collect_literal_chars(prev);
                    if ((earlier & ~budget).any())
                        throw DeadEndError("earlier conjuncts fall outside the composed-of set");
                }
                return cand;
            });
            parts.push_back(part);
            st.pool.push_back(part);
            if (constraint_kind(part) == ConsKind::ConsistOf)
                st.allowed = collect_literal_chars(part->children[0]);
        }
        st.allowed = saved;
        return chain_build(parts, NodeKind::And);
    }

    AstPtr sample_cat(int lo, int hi) {
        int count = part_count(lo, hi);
        std::vector<AstPtr> parts;
        for (int i = 0; i < count; ++i) {
            AstPtr part = retry([&] {
                AstPtr cand = sample_comp();
                if (ast_metrics(cand).depth > cfg.comp_depth_cap)
                    throw DeadEndError("component too deep");
                return cand;
            });
            parts.push_back(part);
            st.pool.push_back(part);
        }
        return chain_build(parts, NodeKind::Concat);
    }

    AstPtr sample_segment() {
        std::vector<ProductionChoice> choices{{"seg.int", nullptr, {}, {}},
                                              {"seg.cat", nullptr, {}, {}}};
        if (pick(choices) == 0)
            return sample_int(1, 2);
        return sample_cat(1, 2);
    }

    AstPtr sample_sep() {
        char d = draw_char(char_class_set(CharClass::Spec) & avail());
        AstPtr delim = re::ch(d);
        st.banned.set(static_cast<std::size_t>(symbol_index(d)));

        // Segments splice into one flat concat spine, the tree's normal form.
        std::vector<AstPtr> elems;
        auto splice = [&elems](const AstPtr& seg) {
            for (const AstPtr& e : chain_elements(seg, NodeKind::Concat))
                elems.push_back(e);
        };
        if (rng.chance(cfg.star_prob)) {
            AstPtr seg = sample_segment();
            std::vector<AstPtr> inner{delim};
            for (const AstPtr& e : chain_elements(seg, NodeKind::Concat))
                inner.push_back(e);
            splice(seg);
            elems.push_back(re::star(chain_build(inner, NodeKind::Concat)));
            return chain_build(elems, NodeKind::Concat);
        }
        AstPtr s1 = sample_segment();
        AstPtr s2 = sample_segment();
        AstPtr s3 = sample_segment();
        splice(s1);
        elems.push_back(delim);
        splice(s2);
        elems.push_back(delim);
        splice(s3);
        return chain_build(elems, NodeKind::Concat);
    }

    AstPtr sample_template(Template t) {
        switch (t) {
        case Template::Intersection: return sample_int(cfg.min_parts, cfg.max_parts);
        case Template::Concatenation: return sample_cat(cfg.min_parts, cfg.max_parts);
        case Template::Separation: return sample_sep();
        }
        throw Error("sample_template: bad template tag");
    }
};

bool valid_sample(const AstPtr& t, Template tmpl, const GrammarConfig& cfg) {
    if (!derivable(t, tmpl))
        return false;
    TemplateShape shape;
    int complexity = 0;
    try {
        shape = decompose(t);
        complexity = semantic_complexity(t);
    } catch (const ShapeError&) {
        return false;
    }
    if (complexity > cfg.complexity_cap)
        return false;
    try {
        Dfa d = compile(t);
        if (is_empty(d) || is_universal(d))
            return false;
        if (shape.tag == Template::Intersection && shape.parts.size() >= 2) {
            std::vector<Dfa> part_dfas;
            part_dfas.reserve(shape.parts.size());
            for (const AstPtr& p : shape.parts)
                part_dfas.push_back(compile(p));
            for (std::size_t i = 0; i < part_dfas.size(); ++i) {
                std::optional<Dfa> rest;
                for (std::size_t j = 0; j < part_dfas.size(); ++j) {
                    if (j == i)
                        continue;
                    rest = rest ? intersect(*rest, part_dfas[j]) : part_dfas[j];
                }
                if (rest && is_empty(difference(*rest, part_dfas[i])))
                    return false; // conjunct i is implied by the others
            }
        }
    } catch (const StateLimitError&) {
        return false;
    }
    return true;
}

} // namespace

AstPtr sample_regex(Template t, const GrammarConfig& cfg, Rng& rng) {
    cfg.validate();
    for (int attempt = 0; attempt < cfg.budget; ++attempt) {
        AstPtr tree;
        try {
            Sampler sampler{cfg, rng, {}};
            tree = sampler.sample_template(t);
        } catch (const DeadEndError&) {
            continue;
        }
        if (valid_sample(tree, t, cfg))
            return tree;
    }
    throw BudgetError("sample_regex: no valid " + std::string(template_name(t)) + " draw within " +
                      std::to_string(cfg.budget) + " attempts");
}

std::vector<std::pair<Template, AstPtr>>
sample_batch(int n, const std::optional<BatchMix>& mix, const GrammarConfig& cfg) {
    cfg.validate();
    if (n < 1)
        throw Error("sample_batch: n must be >= 1");
    BatchMix m;
    if (mix) {
        m = *mix;
        if (m.intersection < 0 || m.concatenation < 0 || m.separation < 0 ||
            m.intersection + m.concatenation + m.separation != n)
            throw Error("sample_batch: mix must be nonnegative and sum to n");
    } else {
        int base = n / 3, extra = n % 3;
        m = {base + (extra > 0 ? 1 : 0), base + (extra > 1 ? 1 : 0), base};
    }

    std::vector<Template> slots;
    slots.insert(slots.end(), static_cast<std::size_t>(m.intersection), Template::Intersection);
    slots.insert(slots.end(), static_cast<std::size_t>(m.concatenation), Template::Concatenation);
    slots.insert(slots.end(), static_cast<std::size_t>(m.separation), Template::Separation);

    std::vector<std::pair<Template, AstPtr>> out;
    out.reserve(slots.size());
    std::set<std::string> keys;
    for (std::size_t slot = 0; slot < slots.size(); ++slot) {
        bool placed = false;
        for (int round = 0; round < cfg.budget && !placed; ++round) {
            Rng slot_rng = Rng::derive(cfg.seed, slot, static_cast<std::uint64_t>(round));
            AstPtr tree;
            try {
                tree = sample_regex(slots[slot], cfg, slot_rng);
            } catch (const BudgetError&) {
                continue; // a fresh stream next round
            }
            if (keys.insert(canonical_key(compile(tree))).second) {
                out.emplace_back(slots[slot], tree);
                placed = true;
            }
        }
        if (!placed)
            throw BudgetError("sample_batch: no fresh regex for slot " + std::to_string(slot) +
                              " within the budget");
    }
    return out;
}

} // namespace streg
