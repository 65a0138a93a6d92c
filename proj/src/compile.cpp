#include "streg/dfa.hpp"

namespace streg {

namespace {

// Two-state-plus-sink acceptor for "exactly one symbol drawn from `set`".
Dfa single_symbol_dfa(const Partition& partition, const CharSet& set) {
    Dfa d;
    d.partition = partition;
    int nblocks = partition.num_blocks();
    d.next.assign(3, std::vector<int>(static_cast<std::size_t>(nblocks), 2));
    d.accepting = {0, 1, 0};
    d.start = 0;
    for (int b : partition.blocks_within(set))
        d.next[0][static_cast<std::size_t>(b)] = 1;
    return d;
}

Dfa string_dfa(const Partition& partition, const std::string& text) {
    Dfa d;
    d.partition = partition;
    int nblocks = partition.num_blocks();
    int len = static_cast<int>(text.size());
    int sink = len + 1;
    d.next.assign(static_cast<std::size_t>(len) + 2,
                  std::vector<int>(static_cast<std::size_t>(nblocks), sink));
    d.accepting.assign(static_cast<std::size_t>(len) + 2, 0);
    d.accepting[static_cast<std::size_t>(len)] = 1;
    d.start = 0;
    for (int i = 0; i < len; ++i) {
        // Each constant character owns a singleton block, so the transition
        // is exact.
        int b = partition.block_of_char(text[static_cast<std::size_t>(i)]);
        d.next[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] = i + 1;
    }
    return d;
}

Dfa universal_dfa(const Partition& partition) {
    Dfa d;
    d.partition = partition;
    d.next.assign(1, std::vector<int>(static_cast<std::size_t>(partition.num_blocks()), 0));
    d.accepting = {1};
    d.start = 0;
    return d;
}

struct Compiler {
    const Partition& partition;
    const CompileLimits& limits;

    Dfa build(const AstPtr& a) {
        switch (a->kind) {
        case NodeKind::ClassTerm:
            return single_symbol_dfa(partition, char_class_set(a->cls));
        case NodeKind::ConstChar:
            return single_symbol_dfa(partition, charset_of(a->text));
        case NodeKind::ConstString:
            return string_dfa(partition, a->text);
        case NodeKind::NotCc: {
            CharSet outside = ~single_symbol_chars(a->children[0]);
            return single_symbol_dfa(partition, outside);
        }
        case NodeKind::StartWith:
            return concat_dfa(build(a->children[0]), universal_dfa(partition), limits);
        case NodeKind::EndWith:
            return concat_dfa(universal_dfa(partition), build(a->children[0]), limits);
        case NodeKind::Contain:
            return concat_dfa(universal_dfa(partition),
                              concat_dfa(build(a->children[0]), universal_dfa(partition), limits),
                              limits);
        case NodeKind::Not:
            return minimize(complement(build(a->children[0])));
        case NodeKind::Optional:
            return repeat_dfa(build(a->children[0]), 0, 1, limits);
        case NodeKind::Star:
            return star_dfa(build(a->children[0]), limits);
        case NodeKind::Concat:
            return concat_dfa(build(a->children[0]), build(a->children[1]), limits);
        case NodeKind::And:
            return intersect(build(a->children[0]), build(a->children[1]), limits);
        case NodeKind::Or:
            return union_dfa(build(a->children[0]), build(a->children[1]), limits);
        case NodeKind::Rep:
        case NodeKind::RepAtLeast:
        case NodeKind::RepRange: {
            if (a->k1 < 0 || (count_params(a->kind) >= 2 && a->k2 < 0))
                throw Error("compile: tree contains placeholder counts");
            if (a->kind == NodeKind::Rep)
                return repeat_dfa(build(a->children[0]), a->k1, a->k1, limits);
            if (a->kind == NodeKind::RepAtLeast)
                return repeat_dfa(build(a->children[0]), a->k1, std::nullopt, limits);
            return repeat_dfa(build(a->children[0]), a->k1, a->k2, limits);
        }
        case NodeKind::AnonConst:
        case NodeKind::Hole:
            throw Error("compile: tree contains placeholder nodes");
        }
        throw Error("compile: bad node kind");
    }
};

} // namespace

Dfa compile(const AstPtr& ast, const CompileLimits& limits) {
    if (contains_hole(ast))
        throw Error("compile: tree contains placeholder nodes");
    Partition partition = Partition::with_constants(collect_constant_chars(ast));
    Compiler compiler{partition, limits};
    return minimize(compiler.build(ast));
}

} // namespace streg
