#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streg/ast.hpp"
#include "streg/rng.hpp"
#include "streg/shape.hpp"

namespace streg {

// Knobs for the probabilistic generator. Production weights default to 1.0
// and can be overridden per dotted key ("cons.basic", "class.num", ...);
// everything else is a named scalar. See docs/config.md for the key list.
struct GrammarConfig {
    std::uint64_t seed = 0;
    double copy_boost = 4.0;  // multiplier on re-deriving an already-used subtree
    int complexity_cap = 6;
    int cons_depth_cap = 4;   // constraint subtree depth (macros exempt)
    int comp_depth_cap = 3;   // component subtree depth
    int budget = 500;         // whole-tree attempts per sample
    int backtrack_limit = 10; // local redraws per slot before giving up
    double recursion_decay = 0.5;
    int min_parts = 2;
    int max_parts = 5;
    double star_prob = 0.3;   // separation: any-number-of-fields rule
    std::map<std::string, double> weights;

    double weight(const std::string& key) const; // 1.0 unless overridden
    void validate() const;                       // throws Error on bad values
};

// Plain-text "key = value" lines; '#' starts a comment. Unknown keys and
// malformed numbers are errors (with the line number).
GrammarConfig parse_grammar_config(std::string_view text);
GrammarConfig load_grammar_config(const std::string& path);

// Mutable context threaded through one derivation.
struct DerivationState {
    std::vector<AstPtr> pool;        // completed subtrees, available for copying
    std::optional<CharSet> allowed;  // composed-of budget, once one is active
    CharSet banned;                  // delimiter symbols segments must not spell out
};

// One candidate expansion at a choice point.
struct ProductionChoice {
    std::string name;    // weight-table key; "copy" for pool replays
    AstPtr pooled;       // set when the choice replays this subtree verbatim
    CharSet introduces;  // symbols the choice commits to right now
    CharSet draws_from;  // symbol pool later draws will come from (empty: none)
};

// Base weights adjusted for the current state: pool replays get the copy
// boost, choices that would step outside the allowed set (or onto a banned
// symbol) drop to zero. Returns probabilities summing to 1; throws
// DeadEndError when nothing remains.
std::vector<double> adapt_weights(const DerivationState& state,
                                  std::span<const ProductionChoice> choices,
                                  const GrammarConfig& cfg);

// Draws one regex of the given template. Guarantees: derivable from the
// template's rules, non-empty and non-universal language, semantic
// complexity within the cap, and no conjunct implied by the others. Throws
// BudgetError when the attempt budget runs out.
AstPtr sample_regex(Template t, const GrammarConfig& cfg, Rng& rng);

struct BatchMix {
    int intersection = 0;
    int concatenation = 0;
    int separation = 0;
};

// Draws n regexes, deduplicated up to language equivalence. Per-item RNG
// streams come from cfg.seed, so output depends only on the seed and the
// counts. Without an explicit mix, n is split as evenly as the three
// templates allow (leftovers go to the earlier ones).
std::vector<std::pair<Template, AstPtr>>
sample_batch(int n, const std::optional<BatchMix>& mix, const GrammarConfig& cfg);

} // namespace streg
