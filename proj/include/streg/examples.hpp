#pragma once

#include <string>
#include <utility>
#include <vector>

#include "streg/ast.hpp"
#include "streg/rng.hpp"

namespace streg {

// Single-subtree mutations used to manufacture near-miss regexes.
enum class PerturbKind : std::uint8_t {
    ClassSwap,          // a character class becomes a neighboring one
    ParameterShift,     // a repetition count moves by one
    NegationFlip,       // a negation is added or removed
    ComponentDrop,      // one chain element disappears
    ComponentDuplicate, // one chain element appears twice
    ConstantSwap,       // a constant changes one character
    OptionalityToggle,  // an optional wrapper is added or removed
};

std::string_view perturb_kind_name(PerturbKind k);

struct Perturbation {
    std::vector<int> path; // root of the subtree the mutation touched
    PerturbKind kind;
};

// Compact provenance string: kind name plus the path, e.g. "class-swap:1.0".
std::string perturbation_tag(const Perturbation& p);

struct LabeledExample {
    std::string text;
    bool positive = false;
    std::string provenance; // "traversal", a perturbation tag, or "fallback"
};

struct ExampleConfig {
    int count = 6;                // examples of each polarity
    int window_slack = 8;         // lengths span [shortest, shortest + slack]
    int attempts_per_string = 64; // redraws before a source is considered dry
};

// Every catalogue mutation of one subtree whose language contains strings the
// original rejects. Ordered with language-superset mutations first, since
// those are the near-misses that still accept all positives. May be empty
// (e.g. nothing escapes a universal language).
std::vector<std::pair<Perturbation, AstPtr>> perturb(const AstPtr& ast, Rng& rng);

struct PositiveSet {
    std::vector<LabeledExample> examples;
    bool shortfall = false; // the window held fewer distinct strings than asked
};

// Distinct accepted strings drawn by coverage-biased automaton walks. Throws
// SampleWindowError when the language is empty.
PositiveSet gen_positive(const AstPtr& ast, const ExampleConfig& cfg, Rng& rng);

struct NegativeSet {
    std::vector<LabeledExample> examples;
    bool shortfall = false; // even the fallback could not reach the count
};

// Rejected strings, preferring draws from perturbed-minus-original languages
// (round-robin over the viable perturbations), then uniform rejected strings
// tagged "fallback". Throws SampleWindowError when the language is empty.
NegativeSet gen_negative(const AstPtr& ast, const ExampleConfig& cfg, Rng& rng);

} // namespace streg
