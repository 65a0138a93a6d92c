#pragma once

#include <map>
#include <string>
#include <vector>

#include "streg/ast.hpp"
#include "streg/dfa.hpp"

namespace streg {

// A regex derivation prefix: the AST read off a pre-order token prefix, with
// Hole nodes (and kCountHole parameters) at the unexpanded positions.
struct PartialRegex {
    AstPtr ast;
    std::vector<std::string> tokens; // the prefix this was parsed from
};

// Parses any left-to-right prefix of a regex token sequence. Throws TokenError
// naming the offending token when the prefix cannot start a valid regex.
PartialRegex from_token_prefix(const std::vector<std::string>& tokens);

// True when no expression or count hole remains.
bool is_complete(const PartialRegex& p);

// Memo table for approximation automata, keyed by printed subtree, so a beam
// of prefixes sharing structure compiles each piece once. One cache per search
// thread; never share one concurrently.
struct ApproxCache {
    std::map<std::string, Dfa> memo;
    std::size_t size() const { return memo.size(); }
};

// Automaton accepting a superset of every hole-free completion's language:
// holes become the universal language, or the empty one under an odd number
// of negations, and unknown counts take their loosest bounds.
Dfa over_approx(const PartialRegex& p, ApproxCache* cache = nullptr);

// The dual substitution: a subset of every completion's language.
Dfa under_approx(const PartialRegex& p, ApproxCache* cache = nullptr);

// False only when no completion can accept every positive and reject every
// negative; never false for a prefix of a consistent regex. A state-cap
// blowup degrades to true rather than raising.
bool feasible(const PartialRegex& p, const std::vector<std::string>& pos,
              const std::vector<std::string>& neg, ApproxCache* cache = nullptr);

} // namespace streg
