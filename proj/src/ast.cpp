#include "streg/ast.hpp"

#include <algorithm>

namespace streg {

int arity(NodeKind k) {
    switch (k) {
    case NodeKind::ClassTerm:
    case NodeKind::ConstChar:
    case NodeKind::ConstString:
    case NodeKind::AnonConst:
    case NodeKind::Hole:
        return 0;
    case NodeKind::Concat:
    case NodeKind::And:
    case NodeKind::Or:
        return 2;
    default:
        return 1;
    }
}

int count_params(NodeKind k) {
    switch (k) {
    case NodeKind::Rep:
    case NodeKind::RepAtLeast:
        return 1;
    case NodeKind::RepRange:
        return 2;
    default:
        return 0;
    }
}

std::string_view node_name(NodeKind k) {
    switch (k) {
    case NodeKind::StartWith: return "startwith";
    case NodeKind::EndWith: return "endwith";
    case NodeKind::Contain: return "contain";
    case NodeKind::Not: return "not";
    case NodeKind::Optional: return "optional";
    case NodeKind::Star: return "star";
    case NodeKind::Concat: return "concat";
    case NodeKind::And: return "and";
    case NodeKind::Or: return "or";
    case NodeKind::Rep: return "rep";
    case NodeKind::RepAtLeast: return "repatleast";
    case NodeKind::RepRange: return "reprange";
    case NodeKind::NotCc: return "notcc";
    case NodeKind::ClassTerm: return "class";
    case NodeKind::ConstChar: return "const-char";
    case NodeKind::ConstString: return "const-string";
    case NodeKind::AnonConst: return "const";
    case NodeKind::Hole: return "hole";
    }
    throw Error("node_name: bad kind");
}

namespace {

AstPtr make(NodeKind kind, std::vector<AstPtr> children, int k1 = 0, int k2 = 0,
            CharClass cls = CharClass::Any, std::string text = {}) {
    for (const AstPtr& c : children)
        if (!c)
            throw Error("ast factory: null child");
    auto node = std::make_shared<RegexAst>();
    node->kind = kind;
    node->children = std::move(children);
    node->k1 = k1;
    node->k2 = k2;
    node->cls = cls;
    node->text = std::move(text);
    return node;
}

void check_count(int k) {
    if (k < 0 && k != kCountHole && k != kCountAnon)
        throw Error("repetition count must be non-negative");
}

} // namespace

namespace re {

AstPtr startwith(AstPtr r) { return make(NodeKind::StartWith, {std::move(r)}); }
AstPtr endwith(AstPtr r) { return make(NodeKind::EndWith, {std::move(r)}); }
AstPtr contain(AstPtr r) { return make(NodeKind::Contain, {std::move(r)}); }
AstPtr negation(AstPtr r) { return make(NodeKind::Not, {std::move(r)}); }
AstPtr optional(AstPtr r) { return make(NodeKind::Optional, {std::move(r)}); }
AstPtr star(AstPtr r) { return make(NodeKind::Star, {std::move(r)}); }
AstPtr concat(AstPtr a, AstPtr b) { return make(NodeKind::Concat, {std::move(a), std::move(b)}); }
AstPtr conj(AstPtr a, AstPtr b) { return make(NodeKind::And, {std::move(a), std::move(b)}); }
AstPtr disj(AstPtr a, AstPtr b) { return make(NodeKind::Or, {std::move(a), std::move(b)}); }

AstPtr rep(AstPtr r, int k) {
    check_count(k);
    return make(NodeKind::Rep, {std::move(r)}, k);
}

AstPtr repatleast(AstPtr r, int k) {
    check_count(k);
    return make(NodeKind::RepAtLeast, {std::move(r)}, k);
}

AstPtr reprange(AstPtr r, int k1, int k2) {
    check_count(k1);
    check_count(k2);
    if (k1 >= 0 && k2 >= 0 && k2 <= k1)
        throw Error("reprange: needs k1 < k2");
    return make(NodeKind::RepRange, {std::move(r)}, k1, k2);
}

AstPtr notcc(AstPtr literal) {
    NodeKind k = literal->kind;
    if (k != NodeKind::ClassTerm && k != NodeKind::ConstChar && k != NodeKind::Hole)
        throw Error("notcc: operand must be a single-symbol literal");
    return make(NodeKind::NotCc, {std::move(literal)});
}

AstPtr cls(CharClass c) { return make(NodeKind::ClassTerm, {}, 0, 0, c); }

AstPtr ch(char c) {
    if (!in_alphabet(c))
        throw Error(std::string("constant character outside the alphabet: '") + c + "'");
    return make(NodeKind::ConstChar, {}, 0, 0, CharClass::Any, std::string(1, c));
}

AstPtr str(std::string s) {
    if (s.size() < 2)
        throw Error("constant string must have length >= 2");
    for (char c : s)
        if (!in_alphabet(c))
            throw Error(std::string("constant string character outside the alphabet: '") + c + "'");
    return make(NodeKind::ConstString, {}, 0, 0, CharClass::Any, std::move(s));
}

AstPtr anon_const() { return make(NodeKind::AnonConst, {}); }
AstPtr hole() { return make(NodeKind::Hole, {}); }

} // namespace re

bool ast_equal(const AstPtr& a, const AstPtr& b) {
    if (a.get() == b.get())
        return true;
    if (!a || !b)
        return false;
    if (a->kind != b->kind || a->k1 != b->k1 || a->k2 != b->k2 || a->cls != b->cls ||
        a->text != b->text || a->children.size() != b->children.size())
        return false;
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!ast_equal(a->children[i], b->children[i]))
            return false;
    return true;
}

AstMetrics ast_metrics(const AstPtr& a) {
    AstMetrics m{1, 1};
    for (const AstPtr& c : a->children) {
        AstMetrics cm = ast_metrics(c);
        m.size += cm.size;
        m.depth = std::max(m.depth, cm.depth + 1);
    }
    return m;
}

AstPtr anonymize(const AstPtr& a) {
    if (a->kind == NodeKind::ConstChar || a->kind == NodeKind::ConstString)
        return re::anon_const();
    auto node = std::make_shared<RegexAst>(*a);
    for (AstPtr& c : node->children)
        c = anonymize(c);
    if (count_params(a->kind) >= 1)
        node->k1 = kCountAnon;
    if (count_params(a->kind) >= 2)
        node->k2 = kCountAnon;
    return node;
}

bool contains_hole(const AstPtr& a) {
    if (a->kind == NodeKind::Hole || a->k1 == kCountHole || a->k2 == kCountHole)
        return true;
    for (const AstPtr& c : a->children)
        if (contains_hole(c))
            return true;
    return false;
}

namespace {
void visit_impl(const AstPtr& a, std::vector<int>& path,
                const std::function<void(const AstPtr&, const std::vector<int>&)>& fn) {
    fn(a, path);
    for (std::size_t i = 0; i < a->children.size(); ++i) {
        path.push_back(static_cast<int>(i));
        visit_impl(a->children[i], path, fn);
        path.pop_back();
    }
}
} // namespace

void visit_ast(const AstPtr& a,
               const std::function<void(const AstPtr&, const std::vector<int>&)>& fn) {
    std::vector<int> path;
    visit_impl(a, path, fn);
}

AstPtr replace_at(const AstPtr& root, std::span<const int> path, AstPtr subst) {
    if (path.empty())
        return subst;
    int idx = path.front();
    if (idx < 0 || idx >= static_cast<int>(root->children.size()))
        throw Error("replace_at: path leaves the tree");
    auto node = std::make_shared<RegexAst>(*root);
    node->children[static_cast<std::size_t>(idx)] =
        replace_at(root->children[static_cast<std::size_t>(idx)], path.subspan(1), std::move(subst));
    return node;
}

std::vector<AstPtr> chain_elements(const AstPtr& a, NodeKind op) {
    std::vector<AstPtr> out;
    AstPtr cur = a;
    while (cur->kind == op) {
        out.push_back(cur->children[0]);
        cur = cur->children[1];
    }
    out.push_back(cur);
    return out;
}

AstPtr chain_build(std::span<const AstPtr> elems, NodeKind op) {
    if (elems.empty())
        throw Error("chain_build: empty chain");
    AstPtr acc = elems.back();
    for (std::size_t i = elems.size() - 1; i-- > 0;) {
        auto node = std::make_shared<RegexAst>();
        node->kind = op;
        node->children = {elems[i], acc};
        acc = node;
    }
    return acc;
}

CharSet collect_constant_chars(const AstPtr& a) {
    CharSet s;
    if (a->kind == NodeKind::ConstChar || a->kind == NodeKind::ConstString)
        s |= charset_of(a->text);
    for (const AstPtr& c : a->children)
        s |= collect_constant_chars(c);
    return s;
}

CharSet collect_literal_chars(const AstPtr& a) {
    CharSet s;
    if (a->kind == NodeKind::ConstChar || a->kind == NodeKind::ConstString)
        s |= charset_of(a->text);
    if (a->kind == NodeKind::ClassTerm && a->cls != CharClass::Any && a->cls != CharClass::Null)
        s |= char_class_set(a->cls);
    for (const AstPtr& c : a->children)
        s |= collect_literal_chars(c);
    return s;
}

CharSet single_symbol_chars(const AstPtr& literal) {
    if (literal->kind == NodeKind::ClassTerm)
        return char_class_set(literal->cls);
    if (literal->kind == NodeKind::ConstChar)
        return charset_of(literal->text);
    throw Error("single_symbol_chars: not a single-symbol literal");
}

} // namespace streg
