#include "streg/shape.hpp"

#include <algorithm>

#include "streg/dsl.hpp"

namespace streg {

std::string_view template_name(Template t) {
    switch (t) {
    case Template::Intersection: return "intersection";
    case Template::Concatenation: return "concatenation";
    case Template::Separation: return "separation";
    }
    throw Error("template_name: bad tag");
}

std::optional<Template> template_from_name(std::string_view name) {
    if (name == "intersection")
        return Template::Intersection;
    if (name == "concatenation")
        return Template::Concatenation;
    if (name == "separation")
        return Template::Separation;
    return std::nullopt;
}

bool cons_kind_is_macro(ConsKind k) {
    switch (k) {
    case ConsKind::ConsistOf:
    case ConsKind::AdvStartwith:
    case ConsKind::AdvEndwith:
    case ConsKind::CondContain:
        return true;
    default:
        return false;
    }
}

bool is_literal(const AstPtr& a) {
    switch (a->kind) {
    case NodeKind::ClassTerm:
        return a->cls != CharClass::Any && a->cls != CharClass::Null;
    case NodeKind::ConstChar:
    case NodeKind::ConstString:
        return true;
    default:
        return false;
    }
}

bool is_literal_set(const AstPtr& a) {
    std::vector<AstPtr> elems = chain_elements(a, NodeKind::Or);
    return std::all_of(elems.begin(), elems.end(), [](const AstPtr& e) { return is_literal(e); });
}

namespace {

bool is_min_cons_expr(const AstPtr& a) {
    if (is_literal(a))
        return true;
    return a->kind == NodeKind::Rep && a->k1 >= 1 && is_literal(a->children[0]);
}

bool is_cons_expr(const AstPtr& a) {
    if (is_literal_set(a) || is_min_cons_expr(a))
        return true;
    return a->kind == NodeKind::Concat && is_min_cons_expr(a->children[0]) &&
           is_min_cons_expr(a->children[1]);
}

bool is_basic_cons(const AstPtr& a) {
    switch (a->kind) {
    case NodeKind::Not:
        return is_basic_cons(a->children[0]);
    case NodeKind::StartWith:
    case NodeKind::EndWith:
    case NodeKind::Contain:
        return is_cons_expr(a->children[0]);
    default:
        return false;
    }
}

bool is_any_class(const AstPtr& a) {
    return a->kind == NodeKind::ClassTerm && a->cls == CharClass::Any;
}

bool is_length_cons(const AstPtr& a) {
    switch (a->kind) {
    case NodeKind::Rep:
    case NodeKind::RepAtLeast:
        return a->k1 >= 0 && is_any_class(a->children[0]);
    case NodeKind::RepRange:
        return a->k1 >= 0 && is_any_class(a->children[0]);
    default:
        return false;
    }
}

bool is_consist_of(const AstPtr& a) {
    return a->kind == NodeKind::RepAtLeast && a->k1 == 1 && is_literal_set(a->children[0]);
}

// and(startwith(lit), not(startwith(lit))) and the endwith twin
bool is_adv(const AstPtr& a, NodeKind dir) {
    if (a->kind != NodeKind::And)
        return false;
    const AstPtr& pos = a->children[0];
    const AstPtr& neg = a->children[1];
    if (pos->kind != dir || !is_literal(pos->children[0]))
        return false;
    if (neg->kind != NodeKind::Not || neg->children[0]->kind != dir)
        return false;
    return is_literal(neg->children[0]->children[0]);
}

bool is_cond_contain(const AstPtr& a) {
    if (a->kind != NodeKind::Not || a->children[0]->kind != NodeKind::Contain)
        return false;
    const AstPtr& body = a->children[0]->children[0];
    if (body->kind != NodeKind::Concat)
        return false;
    const AstPtr& l = body->children[0];
    const AstPtr& r = body->children[1];
    auto notcc_of_literal = [](const AstPtr& x) {
        return x->kind == NodeKind::NotCc && is_literal(x->children[0]);
    };
    return (is_literal(l) && notcc_of_literal(r)) || (notcc_of_literal(l) && is_literal(r));
}

bool is_comp_expr(const AstPtr& a) { return is_literal_set(a); }

bool is_basic_comp(const AstPtr& a) {
    if (is_comp_expr(a))
        return true;
    switch (a->kind) {
    case NodeKind::Rep:
    case NodeKind::RepAtLeast:
        return a->k1 >= 1 && is_comp_expr(a->children[0]);
    case NodeKind::RepRange:
        return a->k1 >= 0 && is_comp_expr(a->children[0]);
    default:
        return false;
    }
}

bool is_macro_comp(const AstPtr& a) {
    if (a->kind != NodeKind::Or)
        return false;
    const AstPtr& l = a->children[0];
    const AstPtr& r = a->children[1];
    if (l->kind != r->kind)
        return false;
    switch (l->kind) {
    case NodeKind::Rep:
    case NodeKind::RepAtLeast:
        if (l->k1 < 1 || r->k1 < 1)
            return false;
        break;
    case NodeKind::RepRange:
        if (l->k1 < 0 || r->k1 < 0)
            return false;
        break;
    default:
        return false;
    }
    return is_literal(l->children[0]) && is_literal(r->children[0]);
}

} // namespace

std::optional<ConsKind> constraint_kind(const AstPtr& a) {
    if (is_length_cons(a))
        return ConsKind::Length;
    if (is_consist_of(a))
        return ConsKind::ConsistOf;
    if (is_adv(a, NodeKind::StartWith))
        return ConsKind::AdvStartwith;
    if (is_adv(a, NodeKind::EndWith))
        return ConsKind::AdvEndwith;
    if (is_cond_contain(a))
        return ConsKind::CondContain;
    switch (a->kind) {
    case NodeKind::Not:
        if (is_basic_cons(a->children[0]))
            return ConsKind::NotWrapped;
        return std::nullopt;
    case NodeKind::StartWith:
        if (is_cons_expr(a->children[0]))
            return ConsKind::Startwith;
        return std::nullopt;
    case NodeKind::EndWith:
        if (is_cons_expr(a->children[0]))
            return ConsKind::Endwith;
        return std::nullopt;
    case NodeKind::Contain:
        if (is_cons_expr(a->children[0]))
            return ConsKind::Contain;
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

bool is_constraint(const AstPtr& a) { return constraint_kind(a).has_value(); }

bool is_component(const AstPtr& a) {
    if (a->kind == NodeKind::Optional)
        return is_component(a->children[0]);
    return is_basic_comp(a) || is_macro_comp(a);
}

// ── Recognizers ─────────────────────────────────────────────────────────────

namespace {

bool derivable_int(const AstPtr& a) {
    if (is_constraint(a))
        return true;
    return a->kind == NodeKind::And && is_constraint(a->children[0]) &&
           derivable_int(a->children[1]);
}

bool derivable_cat(const AstPtr& a) {
    if (is_component(a))
        return true;
    return a->kind == NodeKind::Concat && is_component(a->children[0]) &&
           derivable_cat(a->children[1]);
}

// A segment run: one chain slice that must read as a whole field. Multiple
// elements can only be a component sequence; a single element may also be an
// intersection.
bool seg_run_ok(std::span<const AstPtr> run) {
    if (run.empty())
        return false;
    if (run.size() == 1 && derivable_int(run[0]))
        return true;
    return std::all_of(run.begin(), run.end(), [](const AstPtr& e) { return is_component(e); });
}

bool star_sep_pieces(const std::vector<AstPtr>& elems, std::span<const AstPtr>& lead,
                     AstPtr& delim, std::span<const AstPtr>& rep, std::vector<AstPtr>& inner_store) {
    if (elems.size() < 2)
        return false;
    const AstPtr& last = elems.back();
    if (last->kind != NodeKind::Star || last->children[0]->kind != NodeKind::Concat)
        return false;
    inner_store = chain_elements(last->children[0], NodeKind::Concat);
    if (inner_store.size() < 2 || inner_store[0]->kind != NodeKind::ConstChar)
        return false;
    delim = inner_store[0];
    lead = std::span<const AstPtr>(elems.data(), elems.size() - 1);
    rep = std::span<const AstPtr>(inner_store.data() + 1, inner_store.size() - 1);
    return true;
}

bool derivable_sep(const AstPtr& a) {
    if (a->kind != NodeKind::Concat)
        return false;
    std::vector<AstPtr> elems = chain_elements(a, NodeKind::Concat);

    std::span<const AstPtr> lead, rep;
    AstPtr delim;
    std::vector<AstPtr> inner_store;
    if (star_sep_pieces(elems, lead, delim, rep, inner_store) && seg_run_ok(lead) &&
        seg_run_ok(rep))
        return true;

    std::size_t n = elems.size();
    for (std::size_t i = 1; i + 2 < n; ++i) {
        if (elems[i]->kind != NodeKind::ConstChar)
            continue;
        for (std::size_t j = i + 2; j < n; ++j) {
            if (elems[j]->kind != NodeKind::ConstChar || elems[j]->text != elems[i]->text)
                continue;
            std::span<const AstPtr> all(elems);
            if (seg_run_ok(all.subspan(0, i)) && seg_run_ok(all.subspan(i + 1, j - i - 1)) &&
                seg_run_ok(all.subspan(j + 1)))
                return true;
        }
    }
    return false;
}

} // namespace

bool derivable(const AstPtr& ast, Template t) {
    if (contains_hole(ast))
        return false;
    switch (t) {
    case Template::Intersection: return derivable_int(ast);
    case Template::Concatenation: return derivable_cat(ast);
    case Template::Separation: return derivable_sep(ast);
    }
    return false;
}

// ── Decomposition ───────────────────────────────────────────────────────────

namespace {

// Re-joins startwith(L) immediately followed by not(startwith(L')) into the
// two-node macro when chars(L') ⊆ chars(L); flattening a right-nested chain
// dissolves a trailing macro, and this undoes that. Endwith likewise.
std::vector<AstPtr> merge_adv_pairs(const std::vector<AstPtr>& elems) {
    std::vector<AstPtr> out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i + 1 < elems.size()) {
            const AstPtr& cur = elems[i];
            const AstPtr& nxt = elems[i + 1];
            if ((cur->kind == NodeKind::StartWith || cur->kind == NodeKind::EndWith) &&
                is_literal(cur->children[0]) && nxt->kind == NodeKind::Not &&
                nxt->children[0]->kind == cur->kind && is_literal(nxt->children[0]->children[0])) {
                CharSet allowed = collect_literal_chars(cur->children[0]);
                CharSet banned = collect_literal_chars(nxt->children[0]->children[0]);
                if ((banned & ~allowed).none()) {
                    out.push_back(re::conj(cur, nxt));
                    ++i;
                    continue;
                }
            }
        }
        out.push_back(elems[i]);
    }
    return out;
}

std::optional<std::vector<AstPtr>> int_parts(const AstPtr& a) {
    if (a->kind != NodeKind::And && !is_constraint(a))
        return std::nullopt;
    std::vector<AstPtr> parts = merge_adv_pairs(chain_elements(a, NodeKind::And));
    for (const AstPtr& p : parts)
        if (!is_constraint(p))
            return std::nullopt;
    return parts;
}

std::optional<SegmentShape> parse_segment(std::span<const AstPtr> run) {
    if (run.empty())
        return std::nullopt;
    SegmentShape seg;
    if (std::all_of(run.begin(), run.end(),
                    [](const AstPtr& e) { return is_component(e); })) {
        seg.parts.assign(run.begin(), run.end());
        return seg;
    }
    if (run.size() == 1) {
        if (auto parts = int_parts(run[0])) {
            seg.parts = std::move(*parts);
            seg.intersection = true;
            return seg;
        }
    }
    return std::nullopt;
}

AstPtr rebuild_segment(const SegmentShape& seg) {
    return chain_build(seg.parts, seg.intersection ? NodeKind::And : NodeKind::Concat);
}

bool same_segment(const SegmentShape& a, const SegmentShape& b) {
    return a.intersection == b.intersection && ast_equal(rebuild_segment(a), rebuild_segment(b));
}

std::optional<TemplateShape> decompose_sep(const std::vector<AstPtr>& elems) {
    TemplateShape shape;
    shape.tag = Template::Separation;

    std::span<const AstPtr> lead, rep;
    AstPtr delim;
    std::vector<AstPtr> inner_store;
    if (star_sep_pieces(elems, lead, delim, rep, inner_store)) {
        auto lead_seg = parse_segment(lead);
        auto rep_seg = parse_segment(rep);
        if (lead_seg && rep_seg) {
            shape.star_form = true;
            shape.delimiter = delim;
            shape.segments.push_back(std::move(*lead_seg));
            if (!same_segment(shape.segments[0], *rep_seg))
                shape.segments.push_back(std::move(*rep_seg));
            return shape;
        }
    }

    std::size_t n = elems.size();
    for (std::size_t i = 1; i + 2 < n; ++i) {
        if (elems[i]->kind != NodeKind::ConstChar)
            continue;
        for (std::size_t j = i + 2; j < n; ++j) {
            if (elems[j]->kind != NodeKind::ConstChar || elems[j]->text != elems[i]->text)
                continue;
            std::span<const AstPtr> all(elems);
            auto s1 = parse_segment(all.subspan(0, i));
            auto s2 = parse_segment(all.subspan(i + 1, j - i - 1));
            auto s3 = parse_segment(all.subspan(j + 1));
            if (s1 && s2 && s3) {
                shape.delimiter = elems[i];
                shape.segments = {std::move(*s1), std::move(*s2), std::move(*s3)};
                return shape;
            }
        }
    }
    return std::nullopt;
}

} // namespace

TemplateShape decompose(const AstPtr& ast) {
    if (contains_hole(ast))
        throw ShapeError("decompose: tree has unexpanded holes");
    if (ast->kind == NodeKind::And) {
        if (auto parts = int_parts(ast)) {
            TemplateShape shape;
            shape.tag = Template::Intersection;
            shape.parts = std::move(*parts);
            return shape;
        }
        throw ShapeError("decompose: and-rooted tree whose conjuncts are not constraints: " +
                         print_dsl(ast));
    }
    if (ast->kind == NodeKind::Concat) {
        std::vector<AstPtr> elems = chain_elements(ast, NodeKind::Concat);
        if (auto sep = decompose_sep(elems))
            return *sep;
        if (std::all_of(elems.begin(), elems.end(),
                        [](const AstPtr& e) { return is_component(e); })) {
            TemplateShape shape;
            shape.tag = Template::Concatenation;
            shape.parts = std::move(elems);
            return shape;
        }
        throw ShapeError("decompose: concat-rooted tree that is neither a separation nor a "
                         "component sequence: " +
                         print_dsl(ast));
    }
    if (is_component(ast)) {
        TemplateShape shape;
        shape.tag = Template::Concatenation;
        shape.parts = {ast};
        return shape;
    }
    if (is_constraint(ast)) {
        TemplateShape shape;
        shape.tag = Template::Intersection;
        shape.parts = {ast};
        return shape;
    }
    throw ShapeError("decompose: tree fits no template: " + print_dsl(ast));
}

namespace {

int comp_weight(const AstPtr& comp) {
    AstPtr c = comp;
    while (c->kind == NodeKind::Optional)
        c = c->children[0];
    return is_macro_comp(c) ? 2 : 1;
}

int cons_weight(const AstPtr& cons) {
    auto kind = constraint_kind(cons);
    if (!kind)
        throw ShapeError("semantic_complexity: conjunct is not a constraint: " + print_dsl(cons));
    return cons_kind_is_macro(*kind) ? 2 : 1;
}

int segment_weight(const SegmentShape& seg) {
    int total = 0;
    for (const AstPtr& p : seg.parts)
        total += seg.intersection ? cons_weight(p) : comp_weight(p);
    return total;
}

} // namespace

int semantic_complexity(const AstPtr& ast) {
    TemplateShape shape = decompose(ast);
    int total = 0;
    switch (shape.tag) {
    case Template::Intersection:
        for (const AstPtr& p : shape.parts)
            total += cons_weight(p);
        return total;
    case Template::Concatenation:
        for (const AstPtr& p : shape.parts)
            total += comp_weight(p);
        return total;
    case Template::Separation: {
        total = 1; // the delimiter itself is one stated fact
        std::vector<const SegmentShape*> distinct;
        for (const SegmentShape& seg : shape.segments) {
            bool dup = std::any_of(distinct.begin(), distinct.end(),
                                   [&](const SegmentShape* d) { return same_segment(*d, seg); });
            if (!dup) {
                distinct.push_back(&seg);
                total += segment_weight(seg);
            }
        }
        return total;
    }
    }
    throw ShapeError("semantic_complexity: bad template tag");
}

} // namespace streg
