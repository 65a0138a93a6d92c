#include "streg/alphabet.hpp"

#include <map>

namespace streg {

namespace {

std::string build_symbols() {
    std::string s;
    for (char c = 'A'; c <= 'Z'; ++c) s.push_back(c);
    for (char c = 'a'; c <= 'z'; ++c) s.push_back(c);
    for (char c = '0'; c <= '9'; ++c) s.push_back(c);
    s += kSpecialChars;
    return s;
}

const std::string& symbols_storage() {
    static const std::string s = build_symbols();
    return s;
}

const std::array<int, 256>& index_table() {
    static const std::array<int, 256> table = [] {
        std::array<int, 256> t;
        t.fill(-1);
        const std::string& sym = symbols_storage();
        for (int i = 0; i < static_cast<int>(sym.size()); ++i)
            t[static_cast<unsigned char>(sym[static_cast<std::size_t>(i)])] = i;
        return t;
    }();
    return table;
}

} // namespace

std::string_view alphabet_symbols() { return symbols_storage(); }

bool in_alphabet(char c) { return index_table()[static_cast<unsigned char>(c)] >= 0; }

int symbol_index(char c) { return index_table()[static_cast<unsigned char>(c)]; }

std::string_view char_class_name(CharClass c) {
    switch (c) {
    case CharClass::Let: return "let";
    case CharClass::Cap: return "cap";
    case CharClass::Low: return "low";
    case CharClass::Num: return "num";
    case CharClass::Spec: return "spec";
    case CharClass::Any: return "any";
    case CharClass::Null: return "null";
    }
    throw Error("char_class_name: bad class");
}

std::optional<CharClass> char_class_from_name(std::string_view name) {
    if (name == "let") return CharClass::Let;
    if (name == "cap") return CharClass::Cap;
    if (name == "low") return CharClass::Low;
    if (name == "num") return CharClass::Num;
    if (name == "spec") return CharClass::Spec;
    if (name == "any") return CharClass::Any;
    if (name == "null") return CharClass::Null;
    return std::nullopt;
}

std::string_view char_class_chars(CharClass c) {
    std::string_view all = alphabet_symbols();
    switch (c) {
    case CharClass::Let: return all.substr(0, 52);
    case CharClass::Cap: return all.substr(0, 26);
    case CharClass::Low: return all.substr(26, 26);
    case CharClass::Num: return all.substr(52, 10);
    case CharClass::Spec: return all.substr(62, 16);
    case CharClass::Any: return all;
    case CharClass::Null: return {};
    }
    throw Error("char_class_chars: bad class");
}

CharSet char_class_set(CharClass c) {
    return charset_of(char_class_chars(c));
}

CharSet charset_of(std::string_view chars) {
    CharSet s;
    for (char c : chars) {
        int idx = symbol_index(c);
        if (idx < 0)
            throw Error(std::string("character outside the alphabet: '") + c + "'");
        s.set(static_cast<std::size_t>(idx));
    }
    return s;
}

std::string charset_to_string(const CharSet& s) {
    std::string out;
    for (int i = 0; i < kAlphabetSize; ++i)
        if (s.test(static_cast<std::size_t>(i)))
            out.push_back(alphabet_symbols()[static_cast<std::size_t>(i)]);
    return out;
}

void Partition::rebuild_chars() {
    int nblocks = 0;
    for (int i = 0; i < kAlphabetSize; ++i)
        nblocks = std::max(nblocks, static_cast<int>(block_of_[static_cast<std::size_t>(i)]) + 1);
    block_chars_.assign(static_cast<std::size_t>(nblocks), {});
    for (int i = 0; i < kAlphabetSize; ++i)
        block_chars_[block_of_[static_cast<std::size_t>(i)]].push_back(
            alphabet_symbols()[static_cast<std::size_t>(i)]);
}

const Partition& Partition::base() {
    static const Partition p = with_constants(CharSet{});
    return p;
}

Partition Partition::with_constants(const CharSet& constants) {
    Partition p;
    // Key per symbol: (base class, symbol index when constant). Ids follow
    // first occurrence in alphabet order so equal inputs give equal layouts.
    std::map<std::pair<int, int>, int> ids;
    int next_id = 0;
    for (int i = 0; i < kAlphabetSize; ++i) {
        int base_class = i < 26 ? 0 : i < 52 ? 1 : i < 62 ? 2 : 3;
        std::pair<int, int> key{base_class, constants.test(static_cast<std::size_t>(i)) ? i : -1};
        auto it = ids.find(key);
        if (it == ids.end())
            it = ids.emplace(key, next_id++).first;
        p.block_of_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(it->second);
    }
    p.rebuild_chars();
    return p;
}

Partition Partition::common(const Partition& a, const Partition& b) {
    Partition p;
    std::map<std::pair<int, int>, int> ids;
    int next_id = 0;
    for (int i = 0; i < kAlphabetSize; ++i) {
        std::pair<int, int> key{a.block_of_[static_cast<std::size_t>(i)],
                                b.block_of_[static_cast<std::size_t>(i)]};
        auto it = ids.find(key);
        if (it == ids.end())
            it = ids.emplace(key, next_id++).first;
        p.block_of_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(it->second);
    }
    p.rebuild_chars();
    return p;
}

int Partition::block_of_char(char c) const {
    int idx = symbol_index(c);
    if (idx < 0)
        throw Error(std::string("character outside the alphabet: '") + c + "'");
    return block_of_index(idx);
}

std::vector<int> Partition::blocks_within(const CharSet& s) const {
    if (splits(s))
        throw Error("blocks_within: set cuts through a partition block");
    std::vector<int> out;
    for (int b = 0; b < num_blocks(); ++b) {
        char probe = block_chars_[static_cast<std::size_t>(b)][0];
        if (s.test(static_cast<std::size_t>(symbol_index(probe))))
            out.push_back(b);
    }
    return out;
}

bool Partition::splits(const CharSet& s) const {
    for (int b = 0; b < num_blocks(); ++b) {
        const std::string& chars = block_chars_[static_cast<std::size_t>(b)];
        bool any = false, all = true;
        for (char c : chars) {
            if (s.test(static_cast<std::size_t>(symbol_index(c))))
                any = true;
            else
                all = false;
        }
        if (any && !all)
            return true;
    }
    return false;
}

} // namespace streg
