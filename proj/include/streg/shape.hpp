#pragma once

#include <optional>
#include <vector>

#include "streg/ast.hpp"

namespace streg {

// The three top-level shapes a generated regex can take.
enum class Template : std::uint8_t { Intersection, Concatenation, Separation };

std::string_view template_name(Template t);
std::optional<Template> template_from_name(std::string_view name);

// Categories a single constraint (one conjunct of an Intersection) can fall
// into. The last four are macros and weigh double in semantic complexity.
enum class ConsKind : std::uint8_t {
    Startwith,
    Endwith,
    Contain,
    NotWrapped, // not(...) around a basic constraint
    Length,     // rep/repatleast/reprange over <any>
    ConsistOf,  // repatleast over a literal set with count 1
    AdvStartwith,
    AdvEndwith,
    CondContain,
};

bool cons_kind_is_macro(ConsKind k);

// ── Sub-grammar recognizers ─────────────────────────────────────────────────
//
// Shape predicates for the generator's production set. `is_literal` covers
// the named classes (never <any>/<null>) and constants; a literal set is a
// right-nested or-chain of literals.
bool is_literal(const AstPtr& a);
bool is_literal_set(const AstPtr& a);
bool is_constraint(const AstPtr& a); // any Cons alternative, macros included
bool is_component(const AstPtr& a);  // any Comp alternative

// Classifies a constraint subtree. Returns nullopt when it is not one.
std::optional<ConsKind> constraint_kind(const AstPtr& a);

// True when `ast` can be produced by the template's production rules.
// Purely structural: no emptiness or complexity judgment.
bool derivable(const AstPtr& ast, Template t);

// ── Canonical decomposition ─────────────────────────────────────────────────

struct SegmentShape {
    std::vector<AstPtr> parts; // constraints (and-root) or components
    bool intersection = false; // parts are constraints rather than components
};

// Canonical reading of a template-shaped regex. Intersection: `parts` holds
// one subtree per constraint, with adjacent startwith/not(startwith) pairs
// (and the endwith analogue) re-joined into their two-node macro form when
// the excluded prefix uses a subset of the allowed one. Concatenation:
// `parts` holds the components. Separation: `segments` holds each field and
// `delimiter` the separating constant; `star_form` marks the
// any-number-of-fields variant (one or two segment entries: the lead field
// and, when structurally different, the repeated field).
struct TemplateShape {
    Template tag = Template::Intersection;
    std::vector<AstPtr> parts;          // Intersection / Concatenation
    std::vector<SegmentShape> segments; // Separation
    AstPtr delimiter;                   // Separation
    bool star_form = false;
};

// Throws ShapeError when the tree fits none of the three templates.
TemplateShape decompose(const AstPtr& ast);

// User-facing factor count: one per constraint or component, two per macro;
// a Separation counts its delimiter once plus each structurally distinct
// segment's factors. Throws ShapeError on non-template trees.
int semantic_complexity(const AstPtr& ast);

} // namespace streg
