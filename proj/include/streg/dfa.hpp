#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "streg/alphabet.hpp"
#include "streg/ast.hpp"
#include "streg/rng.hpp"

namespace streg {

struct CompileLimits {
    int max_states = 100000; // cap on any intermediate automaton
};

// Complete deterministic automaton. Transitions are stored per partition
// block, not per symbol: every block's symbols behave identically, so the
// table stays narrow even though the alphabet has 78 symbols.
struct Dfa {
    Partition partition = Partition::base();
    int start = 0;
    std::vector<std::vector<int>> next; // [state][block] -> state
    std::vector<char> accepting;        // nonzero marks an accepting state

    int num_states() const { return static_cast<int>(next.size()); }
    int step(int state, char c) const {
        return next[static_cast<std::size_t>(state)]
                   [static_cast<std::size_t>(partition.block_of_char(c))];
    }
    // Strings with characters outside the alphabet are never accepted.
    bool matches(std::string_view s) const;
};

// AST to automaton. The partition is refined by every constant character in
// the tree; each composite step is determinized and minimized as it is built.
Dfa compile(const AstPtr& ast, const CompileLimits& limits = {});

// ── Boolean algebra and composition ─────────────────────────────────────────

Dfa complement(const Dfa& d);
Dfa intersect(const Dfa& a, const Dfa& b, const CompileLimits& limits = {});
Dfa union_dfa(const Dfa& a, const Dfa& b, const CompileLimits& limits = {});
Dfa difference(const Dfa& a, const Dfa& b, const CompileLimits& limits = {});
Dfa concat_dfa(const Dfa& a, const Dfa& b, const CompileLimits& limits = {});
Dfa star_dfa(const Dfa& d, const CompileLimits& limits = {});
// k2 empty means unbounded (k1 or more copies); k1 == k2 is an exact count.
Dfa repeat_dfa(const Dfa& d, int k1, std::optional<int> k2, const CompileLimits& limits = {});

Dfa minimize(const Dfa& d);

// Rebuilds both automata over their common partition refinement.
std::pair<Dfa, Dfa> align(const Dfa& a, const Dfa& b);
// Re-expresses `d` over `finer`, which must refine d's partition.
Dfa reindex(const Dfa& d, const Partition& finer);

// ── Decision procedures ─────────────────────────────────────────────────────

bool is_empty(const Dfa& d);
bool is_universal(const Dfa& d);
bool equivalent(const Dfa& a, const Dfa& b);
// Lexicographically-least shortest accepted string, or nullopt when empty.
std::optional<std::string> shortest_accepted(const Dfa& d);
int shortest_accepted_length(const Dfa& d); // -1 when the language is empty
// Shortest string accepted by exactly one of the two, when inequivalent.
std::optional<std::string> distinguishing_witness(const Dfa& a, const Dfa& b);

// Language fingerprint: equal strings iff equal languages, independent of how
// the automata were built or partitioned. Serializes the minimal automaton
// with a breadth-first state numbering and per-symbol transitions.
std::string canonical_key(const Dfa& d);

std::string to_dot(const Dfa& d);

// ── Counting, enumeration, sampling ─────────────────────────────────────────

// Number of distinct accepted strings with length in [min_len, max_len],
// saturating at `cap`. Exact below 2^53.
double count_accepted(const Dfa& d, int min_len, int max_len, double cap = 1e18);

// Lexicographic enumeration (by alphabet order) of accepted strings up to
// max_len, stopping after `limit` results.
std::vector<std::string> enumerate_accepted(const Dfa& d, int max_len, std::size_t limit);

// Memory shared by repeated sampling calls. Transitions and symbols that have
// already appeared get down-weighted so later draws explore new paths.
class CoverageState {
public:
    bool seen(int state, int block) const;
    void record(int state, int block, int symbol);
    bool symbol_used(int state, int block, int symbol) const;
    // Fraction of live states (reachable and able to reach acceptance) that
    // sampling has touched.
    double state_coverage(const Dfa& d) const;

private:
    static std::uint64_t key(int state, int block) {
        return (static_cast<std::uint64_t>(state) << 8) | static_cast<std::uint64_t>(block);
    }
    std::unordered_map<std::uint64_t, int> visits_;
    std::unordered_map<std::uint64_t, CharSet> symbols_;
    std::set<int> states_;
    friend std::string sample_accepted(const Dfa&, Rng&, int, int, CoverageState*);
};

// Draws one accepted string with length in [min_len, max_len]. Throws
// SampleWindowError when no accepted string exists in the window. With a
// CoverageState the walk prefers transitions it has not taken before.
std::string sample_accepted(const Dfa& d, Rng& rng, int min_len, int max_len,
                            CoverageState* coverage = nullptr);

} // namespace streg
