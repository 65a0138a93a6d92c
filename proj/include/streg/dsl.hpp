#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "streg/ast.hpp"

namespace streg {

// Largest repetition count the surface syntax admits.
inline constexpr int kMaxCount = 999;

struct DslToken {
    std::string text;
    std::size_t pos = 0; // byte offset in the source text
};

// Splits DSL text into tokens: operator names, "(", ")", ",", "<...>"
// terminals and integer literals. Whitespace-insensitive.
std::vector<DslToken> tokenize_dsl(std::string_view text);

AstPtr parse_dsl(std::string_view text);

// Canonical form: no whitespace, counts in decimal, constants in angle
// brackets. parse_dsl(print_dsl(a)) reproduces `a` exactly for hole-free
// trees; holes print as "?" and do not parse back.
std::string print_dsl(const AstPtr& a);

// Token sequence of the canonical form (used for prefix-based analyses).
std::vector<std::string> dsl_token_strings(const AstPtr& a);

// Rendering into conventional regex notation, with `~` for complement, `&`
// for intersection and U+2205 for the empty language. Complement and
// intersection operands are always parenthesized; constant characters that
// collide with metacharacters are backslash-escaped.
std::string to_standard_regex(const AstPtr& a);

} // namespace streg
