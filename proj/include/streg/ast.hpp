#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "streg/alphabet.hpp"

namespace streg {

// ── Node kinds ──────────────────────────────────────────────────────────────
//
// The sixteen surface operators plus two bookkeeping kinds: AnonConst is the
// `const` placeholder produced by anonymize(), Hole marks an unexpanded
// position in a partial regex. Neither bookkeeping kind is compilable.
enum class NodeKind : std::uint8_t {
    StartWith,   // startwith(r): strings with a prefix in L(r)
    EndWith,     // endwith(r): strings with a suffix in L(r)
    Contain,     // contain(r): strings with an infix in L(r)
    Not,         // not(r): complement
    Optional,    // optional(r): L(r) plus the empty string
    Star,        // star(r): zero or more copies
    Concat,      // concat(a,b)
    And,         // and(a,b): intersection
    Or,          // or(a,b): union
    Rep,         // rep(r,k): exactly k copies
    RepAtLeast,  // repatleast(r,k): k or more copies
    RepRange,    // reprange(r,k1,k2): k1 to k2 copies, inclusive
    NotCc,       // notcc(x): any single symbol outside the chars of literal x
    ClassTerm,   // <num>, <let>, <low>, <cap>, <spec>, <any>, <null>
    ConstChar,   // <c> for one concrete symbol
    ConstString, // <s> for a concrete string of length >= 2
    AnonConst,   // anonymized constant leaf, prints as `const`
    Hole,        // unexpanded subexpression in a partial regex
};

struct RegexAst;
using AstPtr = std::shared_ptr<const RegexAst>;

// Sentinel count values. kCountHole marks an unfilled repetition parameter in
// a partial regex; kCountAnon is the anonymized `int` placeholder.
inline constexpr int kCountHole = -1;
inline constexpr int kCountAnon = -2;

struct RegexAst {
    NodeKind kind;
    std::vector<AstPtr> children;
    int k1 = 0;                     // Rep/RepAtLeast/RepRange first parameter
    int k2 = 0;                     // RepRange second parameter
    CharClass cls = CharClass::Any; // ClassTerm only
    std::string text;               // ConstChar (length 1) / ConstString
};

int arity(NodeKind k);        // child count: 0, 1 or 2
int count_params(NodeKind k); // repetition parameters: 0, 1 or 2
std::string_view node_name(NodeKind k);

// ── Construction ────────────────────────────────────────────────────────────
//
// Factory helpers validate arity and parameter ranges and are the only
// sanctioned way to build nodes.
namespace re {
AstPtr startwith(AstPtr r);
AstPtr endwith(AstPtr r);
AstPtr contain(AstPtr r);
AstPtr negation(AstPtr r); // not(r)
AstPtr optional(AstPtr r);
AstPtr star(AstPtr r);
AstPtr concat(AstPtr a, AstPtr b);
AstPtr conj(AstPtr a, AstPtr b); // and(a,b)
AstPtr disj(AstPtr a, AstPtr b); // or(a,b)
AstPtr rep(AstPtr r, int k);
AstPtr repatleast(AstPtr r, int k);
AstPtr reprange(AstPtr r, int k1, int k2);
AstPtr notcc(AstPtr literal);
AstPtr cls(CharClass c);
AstPtr ch(char c);
AstPtr str(std::string s);
AstPtr anon_const();
AstPtr hole();
} // namespace re

// ── Inspection helpers ──────────────────────────────────────────────────────

bool ast_equal(const AstPtr& a, const AstPtr& b);

struct AstMetrics {
    int size = 0;  // node count
    int depth = 0; // root counts as 1
};
AstMetrics ast_metrics(const AstPtr& a);

// Replaces constant leaves by `const` and repetition counts by `int`.
// Idempotent.
AstPtr anonymize(const AstPtr& a);

bool contains_hole(const AstPtr& a);

// Pre-order visit. The callback gets each node and its path from the root
// (sequence of child indices).
void visit_ast(const AstPtr& a,
               const std::function<void(const AstPtr&, const std::vector<int>&)>& fn);

// Returns a copy of `root` with the node at `path` replaced by `subst`.
AstPtr replace_at(const AstPtr& root, std::span<const int> path, AstPtr subst);

// Flattens the right-nested spine of `op` nodes: chain_elements(and(a,and(b,c)))
// is {a,b,c}. A node of a different kind yields a singleton list.
std::vector<AstPtr> chain_elements(const AstPtr& a, NodeKind op);
AstPtr chain_build(std::span<const AstPtr> elems, NodeKind op);

// Union of symbols of every constant leaf (ConstChar/ConstString).
CharSet collect_constant_chars(const AstPtr& a);

// Union of symbols of every literal leaf: constants plus character classes,
// excluding <any> and <null>. This is what a ComposedBy budget constrains.
CharSet collect_literal_chars(const AstPtr& a);

// Symbols matched by a single-symbol literal (ClassTerm/ConstChar). Throws
// for other kinds.
CharSet single_symbol_chars(const AstPtr& literal);

} // namespace streg
