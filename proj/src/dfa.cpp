#include "streg/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace streg {

bool Dfa::matches(std::string_view s) const {
    int state = start;
    for (char c : s) {
        if (!in_alphabet(c))
            return false;
        state = step(state, c);
    }
    return accepting[static_cast<std::size_t>(state)] != 0;
}

// ── NFA scaffolding (internal) ──────────────────────────────────────────────

namespace {

struct Nfa {
    Partition partition = Partition::base();
    int start = 0;
    std::vector<std::vector<std::pair<int, int>>> edges; // state -> (block, target)
    std::vector<std::vector<int>> eps;
    std::vector<char> accepting;

    int add_state() {
        edges.emplace_back();
        eps.emplace_back();
        accepting.push_back(0);
        return static_cast<int>(edges.size()) - 1;
    }
    int num_states() const { return static_cast<int>(edges.size()); }
};

Nfa nfa_from_dfa(const Dfa& d) {
    Nfa n;
    n.partition = d.partition;
    n.start = d.start;
    for (int s = 0; s < d.num_states(); ++s) {
        n.add_state();
        n.accepting[static_cast<std::size_t>(s)] = d.accepting[static_cast<std::size_t>(s)];
        for (int b = 0; b < d.partition.num_blocks(); ++b)
            n.edges[static_cast<std::size_t>(s)].push_back(
                {b, d.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)]});
    }
    return n;
}

// Appends `src` into `dst`, returning the state offset.
int nfa_append(Nfa& dst, const Nfa& src) {
    int offset = dst.num_states();
    for (int s = 0; s < src.num_states(); ++s) {
        dst.add_state();
        dst.accepting[static_cast<std::size_t>(offset + s)] =
            src.accepting[static_cast<std::size_t>(s)];
        for (auto [b, t] : src.edges[static_cast<std::size_t>(s)])
            dst.edges[static_cast<std::size_t>(offset + s)].push_back({b, t + offset});
        for (int t : src.eps[static_cast<std::size_t>(s)])
            dst.eps[static_cast<std::size_t>(offset + s)].push_back(t + offset);
    }
    return offset;
}

std::vector<int> eps_closure(const Nfa& n, const std::vector<int>& seed) {
    std::vector<char> in_set(static_cast<std::size_t>(n.num_states()), 0);
    std::vector<int> stack = seed;
    for (int s : seed)
        in_set[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int t : n.eps[static_cast<std::size_t>(s)])
            if (!in_set[static_cast<std::size_t>(t)]) {
                in_set[static_cast<std::size_t>(t)] = 1;
                stack.push_back(t);
            }
    }
    std::vector<int> out;
    for (int s = 0; s < n.num_states(); ++s)
        if (in_set[static_cast<std::size_t>(s)])
            out.push_back(s);
    return out;
}

Dfa determinize(const Nfa& n, const CompileLimits& limits) {
    Dfa d;
    d.partition = n.partition;
    int nblocks = d.partition.num_blocks();

    std::map<std::vector<int>, int> ids;
    std::deque<std::vector<int>> queue;

    auto intern = [&](std::vector<int> set) {
        auto it = ids.find(set);
        if (it != ids.end())
            return it->second;
        int id = static_cast<int>(ids.size());
        if (id >= limits.max_states)
            throw StateLimitError("determinize: state cap exceeded");
        ids.emplace(set, id);
        d.next.emplace_back(static_cast<std::size_t>(nblocks), -1);
        bool acc = false;
        for (int s : set)
            acc = acc || n.accepting[static_cast<std::size_t>(s)];
        d.accepting.push_back(acc ? 1 : 0);
        queue.push_back(std::move(set));
        return id;
    };

    d.start = intern(eps_closure(n, {n.start}));
    std::size_t processed = 0;
    while (processed < queue.size()) {
        std::vector<int> set = queue[processed];
        int id = ids.at(set);
        ++processed;
        for (int b = 0; b < nblocks; ++b) {
            std::vector<int> targets;
            for (int s : set)
                for (auto [eb, t] : n.edges[static_cast<std::size_t>(s)])
                    if (eb == b)
                        targets.push_back(t);
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            std::vector<int> closed = eps_closure(n, targets);
            d.next[static_cast<std::size_t>(id)][static_cast<std::size_t>(b)] =
                intern(std::move(closed));
        }
    }
    return d;
}

Dfa determinize_min(const Nfa& n, const CompileLimits& limits) {
    return minimize(determinize(n, limits));
}

std::vector<char> reachable_states(const Dfa& d) {
    std::vector<char> seen(static_cast<std::size_t>(d.num_states()), 0);
    std::vector<int> stack{d.start};
    seen[static_cast<std::size_t>(d.start)] = 1;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int t : d.next[static_cast<std::size_t>(s)])
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = 1;
                stack.push_back(t);
            }
    }
    return seen;
}

// States from which some accepting state is reachable.
std::vector<char> productive_states(const Dfa& d) {
    int ns = d.num_states();
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(ns));
    for (int s = 0; s < ns; ++s)
        for (int t : d.next[static_cast<std::size_t>(s)])
            rev[static_cast<std::size_t>(t)].push_back(s);
    std::vector<char> live(static_cast<std::size_t>(ns), 0);
    std::vector<int> stack;
    for (int s = 0; s < ns; ++s)
        if (d.accepting[static_cast<std::size_t>(s)]) {
            live[static_cast<std::size_t>(s)] = 1;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int p : rev[static_cast<std::size_t>(s)])
            if (!live[static_cast<std::size_t>(p)]) {
                live[static_cast<std::size_t>(p)] = 1;
                stack.push_back(p);
            }
    }
    return live;
}

} // namespace

// ── Minimization ────────────────────────────────────────────────────────────

Dfa minimize(const Dfa& d) {
    int ns = d.num_states();
    int nblocks = d.partition.num_blocks();
    std::vector<char> reach = reachable_states(d);

    // Moore refinement over the reachable part.
    std::vector<int> cls(static_cast<std::size_t>(ns), -1);
    for (int s = 0; s < ns; ++s)
        if (reach[static_cast<std::size_t>(s)])
            cls[static_cast<std::size_t>(s)] = d.accepting[static_cast<std::size_t>(s)] ? 1 : 0;

    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(static_cast<std::size_t>(ns), -1);
        for (int s = 0; s < ns; ++s) {
            if (!reach[static_cast<std::size_t>(s)])
                continue;
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(nblocks) + 1);
            sig.push_back(cls[static_cast<std::size_t>(s)]);
            for (int b = 0; b < nblocks; ++b)
                sig.push_back(cls[static_cast<std::size_t>(
                    d.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)])]);
            auto it = sig_ids.find(sig);
            if (it == sig_ids.end())
                it = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size())).first;
            next_cls[static_cast<std::size_t>(s)] = it->second;
        }
        for (int s = 0; s < ns; ++s)
            if (reach[static_cast<std::size_t>(s)] &&
                next_cls[static_cast<std::size_t>(s)] != cls[static_cast<std::size_t>(s)])
                changed = true;
        cls = std::move(next_cls);
    }

    // Rebuild with breadth-first numbering from the start class, following
    // blocks in order. This makes the result canonical for its language.
    Dfa out;
    out.partition = d.partition;
    std::map<int, int> renumber;
    std::deque<int> queue; // representative states
    auto intern = [&](int state) {
        int c = cls[static_cast<std::size_t>(state)];
        auto it = renumber.find(c);
        if (it != renumber.end())
            return it->second;
        int id = static_cast<int>(renumber.size());
        renumber.emplace(c, id);
        out.next.emplace_back(static_cast<std::size_t>(nblocks), -1);
        out.accepting.push_back(d.accepting[static_cast<std::size_t>(state)]);
        queue.push_back(state);
        return id;
    };
    out.start = intern(d.start);
    while (!queue.empty()) {
        int rep = queue.front();
        queue.pop_front();
        int id = renumber.at(cls[static_cast<std::size_t>(rep)]);
        for (int b = 0; b < nblocks; ++b) {
            int t = d.next[static_cast<std::size_t>(rep)][static_cast<std::size_t>(b)];
            out.next[static_cast<std::size_t>(id)][static_cast<std::size_t>(b)] = intern(t);
        }
    }
    return out;
}

// ── Partition alignment ─────────────────────────────────────────────────────

Dfa reindex(const Dfa& d, const Partition& finer) {
    Dfa out;
    out.partition = finer;
    out.start = d.start;
    out.accepting = d.accepting;
    int nblocks = finer.num_blocks();
    out.next.assign(static_cast<std::size_t>(d.num_states()),
                    std::vector<int>(static_cast<std::size_t>(nblocks), -1));
    for (int s = 0; s < d.num_states(); ++s)
        for (int b = 0; b < nblocks; ++b) {
            char probe = finer.block_chars(b)[0];
            int old_block = d.partition.block_of_char(probe);
            out.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)] =
                d.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(old_block)];
        }
    return out;
}

std::pair<Dfa, Dfa> align(const Dfa& a, const Dfa& b) {
    if (a.partition == b.partition)
        return {a, b};
    Partition common = Partition::common(a.partition, b.partition);
    return {reindex(a, common), reindex(b, common)};
}

// ── Boolean algebra ─────────────────────────────────────────────────────────

Dfa complement(const Dfa& d) {
    Dfa out = d;
    for (char& acc : out.accepting)
        acc = acc ? 0 : 1;
    return out;
}

namespace {

template <class AcceptOp>
Dfa product(const Dfa& a0, const Dfa& b0, AcceptOp accept_op, const CompileLimits& limits) {
    auto [a, b] = align(a0, b0);
    int nblocks = a.partition.num_blocks();
    Dfa out;
    out.partition = a.partition;

    std::map<std::pair<int, int>, int> ids;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](std::pair<int, int> pair) {
        auto it = ids.find(pair);
        if (it != ids.end())
            return it->second;
        int id = static_cast<int>(ids.size());
        if (id >= limits.max_states)
            throw StateLimitError("product: state cap exceeded");
        ids.emplace(pair, id);
        out.next.emplace_back(static_cast<std::size_t>(nblocks), -1);
        out.accepting.push_back(accept_op(a.accepting[static_cast<std::size_t>(pair.first)] != 0,
                                          b.accepting[static_cast<std::size_t>(pair.second)] != 0)
                                    ? 1
                                    : 0);
        queue.push_back(pair);
        return id;
    };
    out.start = intern({a.start, b.start});
    while (!queue.empty()) {
        auto pair = queue.front();
        queue.pop_front();
        int id = ids.at(pair);
        for (int blk = 0; blk < nblocks; ++blk) {
            std::pair<int, int> tgt{
                a.next[static_cast<std::size_t>(pair.first)][static_cast<std::size_t>(blk)],
                b.next[static_cast<std::size_t>(pair.second)][static_cast<std::size_t>(blk)]};
            out.next[static_cast<std::size_t>(id)][static_cast<std::size_t>(blk)] = intern(tgt);
        }
    }
    return minimize(out);
}

} // namespace

Dfa intersect(const Dfa& a, const Dfa& b, const CompileLimits& limits) {
    return product(a, b, [](bool x, bool y) { return x && y; }, limits);
}

Dfa union_dfa(const Dfa& a, const Dfa& b, const CompileLimits& limits) {
    return product(a, b, [](bool x, bool y) { return x || y; }, limits);
}

Dfa difference(const Dfa& a, const Dfa& b, const CompileLimits& limits) {
    return product(a, b, [](bool x, bool y) { return x && !y; }, limits);
}

// ── Concatenation-style composition ─────────────────────────────────────────

Dfa concat_dfa(const Dfa& a0, const Dfa& b0, const CompileLimits& limits) {
    auto [a, b] = align(a0, b0);
    Nfa n = nfa_from_dfa(a);
    int offset = nfa_append(n, nfa_from_dfa(b));
    for (int s = 0; s < a.num_states(); ++s)
        if (a.accepting[static_cast<std::size_t>(s)]) {
            n.accepting[static_cast<std::size_t>(s)] = 0;
            n.eps[static_cast<std::size_t>(s)].push_back(offset + b.start);
        }
    return determinize_min(n, limits);
}

Dfa star_dfa(const Dfa& d, const CompileLimits& limits) {
    Nfa n;
    n.partition = d.partition;
    int hub = n.add_state(); // accepting entry point, also the loop-back target
    n.accepting[static_cast<std::size_t>(hub)] = 1;
    int offset = nfa_append(n, nfa_from_dfa(d));
    n.start = hub;
    n.eps[static_cast<std::size_t>(hub)].push_back(offset + d.start);
    for (int s = 0; s < d.num_states(); ++s)
        if (d.accepting[static_cast<std::size_t>(s)])
            n.eps[static_cast<std::size_t>(offset + s)].push_back(hub);
    return determinize_min(n, limits);
}

Dfa repeat_dfa(const Dfa& d, int k1, std::optional<int> k2, const CompileLimits& limits) {
    if (k1 < 0 || (k2 && *k2 < k1))
        throw Error("repeat_dfa: bad bounds");

    if (!k2) {
        // k1 mandatory copies flowing into a star tail.
        Dfa tail = star_dfa(d, limits);
        for (int i = 0; i < k1; ++i)
            tail = concat_dfa(d, tail, limits);
        return tail;
    }

    Nfa n;
    n.partition = d.partition;
    int entry = n.add_state();
    n.start = entry;
    if (k1 == 0)
        n.accepting[static_cast<std::size_t>(entry)] = 1;
    std::vector<int> copy_offsets;
    for (int copy = 1; copy <= *k2; ++copy) {
        int offset = nfa_append(n, nfa_from_dfa(d));
        copy_offsets.push_back(offset);
        if (copy == 1) {
            n.eps[static_cast<std::size_t>(entry)].push_back(offset + d.start);
        } else {
            int prev = copy_offsets[static_cast<std::size_t>(copy - 2)];
            for (int s = 0; s < d.num_states(); ++s)
                if (d.accepting[static_cast<std::size_t>(s)])
                    n.eps[static_cast<std::size_t>(prev + s)].push_back(offset + d.start);
        }
        // The appended copy's accepting flags are kept only when `copy` full
        // repetitions form an accepted count.
        for (int s = 0; s < d.num_states(); ++s)
            n.accepting[static_cast<std::size_t>(offset + s)] =
                (copy >= k1 && d.accepting[static_cast<std::size_t>(s)]) ? 1 : 0;
    }
    return determinize_min(n, limits);
}

// ── Decision procedures ─────────────────────────────────────────────────────

bool is_empty(const Dfa& d) {
    std::vector<char> reach = reachable_states(d);
    for (int s = 0; s < d.num_states(); ++s)
        if (reach[static_cast<std::size_t>(s)] && d.accepting[static_cast<std::size_t>(s)])
            return false;
    return true;
}

bool is_universal(const Dfa& d) {
    std::vector<char> reach = reachable_states(d);
    for (int s = 0; s < d.num_states(); ++s)
        if (reach[static_cast<std::size_t>(s)] && !d.accepting[static_cast<std::size_t>(s)])
            return false;
    return true;
}

bool equivalent(const Dfa& a0, const Dfa& b0) {
    auto [a, b] = align(a0, b0);
    int nblocks = a.partition.num_blocks();
    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> queue;
    queue.push_back({a.start, b.start});
    seen.insert({a.start, b.start});
    while (!queue.empty()) {
        auto [sa, sb] = queue.front();
        queue.pop_front();
        if ((a.accepting[static_cast<std::size_t>(sa)] != 0) !=
            (b.accepting[static_cast<std::size_t>(sb)] != 0))
            return false;
        for (int blk = 0; blk < nblocks; ++blk) {
            std::pair<int, int> tgt{a.next[static_cast<std::size_t>(sa)][static_cast<std::size_t>(blk)],
                                    b.next[static_cast<std::size_t>(sb)][static_cast<std::size_t>(blk)]};
            if (seen.insert(tgt).second)
                queue.push_back(tgt);
        }
    }
    return true;
}

std::optional<std::string> shortest_accepted(const Dfa& d) {
    // BFS by blocks in order; expanding each block's lexicographically first
    // symbol-ordered... walk symbols in alphabet order for a stable witness.
    int ns = d.num_states();
    std::vector<int> parent(static_cast<std::size_t>(ns), -1);
    std::vector<char> parent_sym(static_cast<std::size_t>(ns), 0);
    std::vector<char> seen(static_cast<std::size_t>(ns), 0);
    std::deque<int> queue;
    queue.push_back(d.start);
    seen[static_cast<std::size_t>(d.start)] = 1;
    int found = d.accepting[static_cast<std::size_t>(d.start)] ? d.start : -1;
    while (!queue.empty() && found < 0) {
        int s = queue.front();
        queue.pop_front();
        for (char c : alphabet_symbols()) {
            int t = d.step(s, c);
            if (seen[static_cast<std::size_t>(t)])
                continue;
            seen[static_cast<std::size_t>(t)] = 1;
            parent[static_cast<std::size_t>(t)] = s;
            parent_sym[static_cast<std::size_t>(t)] = c;
            if (d.accepting[static_cast<std::size_t>(t)]) {
                found = t;
                break;
            }
            queue.push_back(t);
        }
    }
    if (found < 0)
        return std::nullopt;
    std::string out;
    for (int s = found; parent[static_cast<std::size_t>(s)] >= 0;
         s = parent[static_cast<std::size_t>(s)])
        out.push_back(parent_sym[static_cast<std::size_t>(s)]);
    std::reverse(out.begin(), out.end());
    return out;
}

int shortest_accepted_length(const Dfa& d) {
    auto s = shortest_accepted(d);
    return s ? static_cast<int>(s->size()) : -1;
}

std::optional<std::string> distinguishing_witness(const Dfa& a, const Dfa& b) {
    Dfa left = difference(a, b);
    Dfa right = difference(b, a);
    auto sl = shortest_accepted(left);
    auto sr = shortest_accepted(right);
    if (!sl)
        return sr;
    if (!sr)
        return sl;
    if (sl->size() != sr->size())
        return sl->size() < sr->size() ? sl : sr;
    return std::min(*sl, *sr);
}

// ── Canonical fingerprint ───────────────────────────────────────────────────

std::string canonical_key(const Dfa& d0) {
    Dfa d = minimize(d0);
    // Renumber by BFS over symbols in alphabet order; this is independent of
    // the partition layout, so differently-refined but equal languages agree.
    std::map<int, int> renumber;
    std::vector<int> order;
    std::deque<int> queue;
    renumber.emplace(d.start, 0);
    order.push_back(d.start);
    queue.push_back(d.start);
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (char c : alphabet_symbols()) {
            int t = d.step(s, c);
            if (!renumber.count(t)) {
                renumber.emplace(t, static_cast<int>(renumber.size()));
                order.push_back(t);
                queue.push_back(t);
            }
        }
    }
    std::string key;
    key.reserve(order.size() * 80);
    for (int s : order) {
        key += d.accepting[static_cast<std::size_t>(s)] ? 'A' : 'r';
        for (char c : alphabet_symbols()) {
            key += std::to_string(renumber.at(d.step(s, c)));
            key += ',';
        }
        key += ';';
    }
    return key;
}

std::string to_dot(const Dfa& d) {
    std::string out = "digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n";
    out += "  __start [shape=point];\n  __start -> s" + std::to_string(d.start) + ";\n";
    for (int s = 0; s < d.num_states(); ++s) {
        out += "  s" + std::to_string(s) + " [label=\"" + std::to_string(s) + "\"";
        if (d.accepting[static_cast<std::size_t>(s)])
            out += ", shape=doublecircle";
        out += "];\n";
    }
    for (int s = 0; s < d.num_states(); ++s)
        for (int b = 0; b < d.partition.num_blocks(); ++b) {
            const std::string& chars = d.partition.block_chars(b);
            std::string label = chars.size() <= 4 ? chars : chars.substr(0, 3) + "..";
            out += "  s" + std::to_string(s) + " -> s" +
                   std::to_string(d.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)]) +
                   " [label=\"" + label + "\"];\n";
        }
    out += "}\n";
    return out;
}

// ── Counting, enumeration, sampling ─────────────────────────────────────────

double count_accepted(const Dfa& d, int min_len, int max_len, double cap) {
    if (min_len < 0 || max_len < min_len)
        throw Error("count_accepted: bad window");
    int ns = d.num_states();
    int nblocks = d.partition.num_blocks();
    // count[s] = number of accepted continuations of exactly `j` symbols.
    std::vector<double> count(static_cast<std::size_t>(ns));
    std::vector<double> prev(static_cast<std::size_t>(ns));
    double total = 0.0;
    for (int j = 0; j <= max_len; ++j) {
        if (j == 0) {
            for (int s = 0; s < ns; ++s)
                count[static_cast<std::size_t>(s)] = d.accepting[static_cast<std::size_t>(s)] ? 1 : 0;
        } else {
            prev.swap(count);
            for (int s = 0; s < ns; ++s) {
                double acc = 0.0;
                for (int b = 0; b < nblocks; ++b)
                    acc += static_cast<double>(d.partition.block_size(b)) *
                           prev[static_cast<std::size_t>(
                               d.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)])];
                count[static_cast<std::size_t>(s)] = std::min(acc, cap);
            }
        }
        if (j >= min_len)
            total = std::min(total + count[static_cast<std::size_t>(d.start)], cap);
    }
    return total;
}

namespace {
void enumerate_impl(const Dfa& d, int state, int max_len, std::size_t limit,
                    const std::vector<std::vector<char>>& within, std::string& prefix,
                    std::vector<std::string>& out) {
    if (out.size() >= limit)
        return;
    if (d.accepting[static_cast<std::size_t>(state)])
        out.push_back(prefix);
    if (static_cast<int>(prefix.size()) >= max_len)
        return;
    std::size_t remaining = static_cast<std::size_t>(max_len) - prefix.size();
    for (char c : alphabet_symbols()) {
        if (out.size() >= limit)
            return;
        int t = d.step(state, c);
        // skip subtrees holding no accepted string within the length budget
        if (!within[remaining - 1][static_cast<std::size_t>(t)])
            continue;
        prefix.push_back(c);
        enumerate_impl(d, t, max_len, limit, within, prefix, out);
        prefix.pop_back();
    }
}
} // namespace

std::vector<std::string> enumerate_accepted(const Dfa& d, int max_len, std::size_t limit) {
    int ns = d.num_states();
    int nblocks = d.partition.num_blocks();
    // within[j][s]: an accepting state lies at most j steps ahead of s
    std::vector<std::vector<char>> within(static_cast<std::size_t>(max_len) + 1,
                                          std::vector<char>(static_cast<std::size_t>(ns), 0));
    for (int s = 0; s < ns; ++s)
        within[0][static_cast<std::size_t>(s)] = d.accepting[static_cast<std::size_t>(s)];
    for (int j = 1; j <= max_len; ++j)
        for (int s = 0; s < ns; ++s) {
            char ok = d.accepting[static_cast<std::size_t>(s)];
            for (int b = 0; b < nblocks && !ok; ++b)
                ok = within[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(
                    d.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)])];
            within[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] = ok;
        }
    std::vector<std::string> out;
    std::string prefix;
    enumerate_impl(d, d.start, max_len, limit, within, prefix, out);
    return out;
}

bool CoverageState::seen(int state, int block) const { return visits_.count(key(state, block)) > 0; }

void CoverageState::record(int state, int block, int symbol) {
    ++visits_[key(state, block)];
    symbols_[key(state, block)].set(static_cast<std::size_t>(symbol));
    states_.insert(state);
}

bool CoverageState::symbol_used(int state, int block, int symbol) const {
    auto it = symbols_.find(key(state, block));
    return it != symbols_.end() && it->second.test(static_cast<std::size_t>(symbol));
}

double CoverageState::state_coverage(const Dfa& d) const {
    std::vector<char> reach = reachable_states(d);
    std::vector<char> live = productive_states(d);
    int total = 0, visited = 0;
    for (int s = 0; s < d.num_states(); ++s)
        if (reach[static_cast<std::size_t>(s)] && live[static_cast<std::size_t>(s)]) {
            ++total;
            if (states_.count(s))
                ++visited;
        }
    return total == 0 ? 0.0 : static_cast<double>(visited) / static_cast<double>(total);
}

std::string sample_accepted(const Dfa& d, Rng& rng, int min_len, int max_len,
                            CoverageState* coverage) {
    if (min_len < 0 || max_len < min_len)
        throw SampleWindowError("sample_accepted: bad length window");
    int ns = d.num_states();
    int nblocks = d.partition.num_blocks();

    // reach[j][s]: an accepting state lies exactly j steps ahead of s.
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(max_len) + 1,
                                         std::vector<char>(static_cast<std::size_t>(ns), 0));
    for (int s = 0; s < ns; ++s)
        reach[0][static_cast<std::size_t>(s)] = d.accepting[static_cast<std::size_t>(s)];
    for (int j = 1; j <= max_len; ++j)
        for (int s = 0; s < ns; ++s) {
            char ok = 0;
            for (int b = 0; b < nblocks && !ok; ++b)
                ok = reach[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(
                    d.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)])];
            reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] = ok;
        }

    std::vector<int> lengths;
    for (int len = min_len; len <= max_len; ++len)
        if (reach[static_cast<std::size_t>(len)][static_cast<std::size_t>(d.start)])
            lengths.push_back(len);
    if (lengths.empty())
        throw SampleWindowError("sample_accepted: no accepted string in the length window");

    int target = lengths[static_cast<std::size_t>(rng.below(lengths.size()))];
    std::string out;
    out.reserve(static_cast<std::size_t>(target));
    int state = d.start;
    constexpr double kNoveltyBoost = 8.0;
    for (int remaining = target; remaining > 0; --remaining) {
        std::vector<int> options;
        std::vector<double> weights;
        for (int b = 0; b < nblocks; ++b) {
            int t = d.next[static_cast<std::size_t>(state)][static_cast<std::size_t>(b)];
            if (!reach[static_cast<std::size_t>(remaining - 1)][static_cast<std::size_t>(t)])
                continue;
            options.push_back(b);
            double w = static_cast<double>(d.partition.block_size(b));
            if (coverage && !coverage->seen(state, b))
                w *= kNoveltyBoost;
            weights.push_back(w);
        }
        int block = options[rng.pick_weighted(weights)];
        const std::string& chars = d.partition.block_chars(block);
        char symbol = 0;
        if (coverage) {
            std::string unused;
            for (char c : chars)
                if (!coverage->symbol_used(state, block, symbol_index(c)))
                    unused.push_back(c);
            const std::string& pool = unused.empty() ? chars : unused;
            symbol = pool[static_cast<std::size_t>(rng.below(pool.size()))];
            coverage->record(state, block, symbol_index(symbol));
        } else {
            symbol = chars[static_cast<std::size_t>(rng.below(chars.size()))];
        }
        out.push_back(symbol);
        state = d.next[static_cast<std::size_t>(state)][static_cast<std::size_t>(block)];
    }
    if (coverage)
        coverage->states_.insert(state); // walk end; interior states were recorded as sources
    return out;
}

} // namespace streg
