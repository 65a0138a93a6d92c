#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "streg/alphabet.hpp"
#include "streg/ast.hpp"
#include "streg/shape.hpp"

namespace streg {

struct SynthesisTask {
    std::vector<std::string> pos;
    std::vector<std::string> neg;
    std::optional<Template> hint; // restricts the search to one template
};

// Terminal menu the search may draw from, distilled from the task's strings
// so constants stay relevant and branching stays finite.
struct TerminalPool {
    std::vector<AstPtr> literals;   // character classes, then observed constants
    std::vector<AstPtr> delimiters; // special-character constants seen in examples
    std::vector<int> counts;        // repetition parameter menu
};
TerminalPool pool_from_examples(const SynthesisTask& task);

// One grammar step: the leftmost unexpanded slot replaced by a production.
// logprob is the grammar's own cost of the step: uniform over production
// types, then uniform over the literals a type offers.
struct Expansion {
    std::string production; // label such as "cons.startwith"
    AstPtr result;          // whole tree after the step
    CharSet introduces;     // symbols of any literal the step added
    int alternatives = 1;   // production types at the choice point
    double logprob = 0.0;
};

// All productions applicable to the leftmost hole; empty when the tree is
// complete. Deterministic order.
std::vector<Expansion> expand(const AstPtr& partial, const TerminalPool& pool);

struct BeamItem {
    AstPtr partial;
    double score = 0.0;
    CharSet mentioned; // literal symbols of the prefix, scorer state
};

// Per-step score increment; the item's score is the sum along its derivation,
// so ranking is monotone-decomposable. Higher is better.
using Scorer = std::function<double(const BeamItem& parent, const Expansion& e)>;

// Grammar log-probability (uniform over alternatives) plus an example-overlap
// bonus: newly mentioned character classes the positives draw from, and any
// change in how many example verdicts the partial's language bounds already
// settle the right way.
Scorer default_scorer(const SynthesisTask& task);

struct SynthConfig {
    int beam_width = 20;
    int k = 20;              // completions collected before stopping
    int node_budget = 20000; // expansions scored before giving up
    int max_ast_size = 40;   // derivations larger than this are dropped
    bool prune = true;       // approximation-based feasibility pruning
    int prune_stride = 1;    // apply pruning every Nth step
};

enum class SynthStatus {
    Found,        // at least one candidate survived
    NoSolution,   // search gave out (budget or beam overflow) empty-handed
    Inconsistent, // space exhausted without overflow: no consistent regex fits
};
std::string_view synth_status_name(SynthStatus s);

struct SynthResult {
    std::vector<AstPtr> ranked; // best first: score, then size, then DSL text
    SynthStatus status = SynthStatus::NoSolution;
    int expansions = 0;
    bool beam_overflowed = false;
};

SynthResult synth_beam(const SynthesisTask& task, const Scorer& scorer, const SynthConfig& cfg);

// Earliest candidate accepting every positive and rejecting every negative.
std::optional<AstPtr> filter_kbest(const std::vector<AstPtr>& candidates,
                                   const std::vector<std::string>& pos,
                                   const std::vector<std::string>& neg);

// Replay of a finished regex inside the production system: the step sequence
// from the bare template hole to the full tree. Throws Error when the tree
// cannot be derived from the pool.
struct DerivationStep {
    AstPtr partial; // before the step
    Expansion taken;
};
std::vector<DerivationStep> derivation_path(const AstPtr& truth, Template tpl,
                                            const TerminalPool& pool);
double score_path(const std::vector<DerivationStep>& path, const Scorer& scorer);

struct TaskOutcome {
    bool equiv_at_1 = false;
    bool equiv_in_k = false;
    bool consistent_in_k = false;
};

struct EvalReport {
    std::vector<TaskOutcome> tasks;
    double acc_pct = 0.0;              // language-equivalent at rank 1
    double equiv_found_pct = 0.0;      // language-equivalent anywhere in the list
    double consistent_found_pct = 0.0; // example-consistent anywhere in the list
};

// Scores ranked prediction lists against gold regexes and their example sets.
// Throws Error when the three sequences disagree in length.
EvalReport evaluate(const std::vector<std::vector<AstPtr>>& predictions,
                    const std::vector<AstPtr>& gold, const std::vector<SynthesisTask>& tasks);
std::string format_report(const EvalReport& report);

// Text exchange format: one ranked DSL string per line, tasks separated by
// blank lines, "-" for an empty list. Parse problems raise SchemaError with
// the 1-based line number.
std::vector<std::vector<AstPtr>> load_predictions(const std::string& path);
void save_predictions(const std::string& path, const std::vector<std::vector<AstPtr>>& preds);

} // namespace streg
