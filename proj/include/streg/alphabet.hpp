#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streg/errors.hpp"

namespace streg {

// The working universe: 26 capitals, 26 lowercase letters, 10 digits and the
// 16 special characters below. 78 symbols total.
inline constexpr std::string_view kSpecialChars = "-,;.+:!@#_$%&*=^";
inline constexpr int kAlphabetSize = 78;

// Character classes usable as DSL terminals. Any matches every symbol, Null
// matches none.
enum class CharClass : std::uint8_t { Let, Cap, Low, Num, Spec, Any, Null };

std::string_view alphabet_symbols();          // all 78 symbols, fixed order
bool in_alphabet(char c);
int symbol_index(char c);                     // -1 when not in the alphabet

std::string_view char_class_name(CharClass c);            // "let", "cap", ...
std::optional<CharClass> char_class_from_name(std::string_view name);
std::string_view char_class_chars(CharClass c);           // member symbols

using CharSet = std::bitset<kAlphabetSize>;

CharSet char_class_set(CharClass c);
CharSet charset_of(std::string_view chars);   // throws on out-of-alphabet char
std::string charset_to_string(const CharSet& s);

// A partition of the alphabet into blocks with identical transition behavior.
// Automata store one transition per block instead of one per symbol. The base
// partition has four blocks (capitals, lowercase, digits, specials); regexes
// that mention constant characters refine it by splitting those characters
// into singleton blocks. Block ids are canonical: they follow first occurrence
// in alphabet order, so equal refinements compare equal.
class Partition {
public:
    static const Partition& base();
    static Partition with_constants(const CharSet& constants);
    // Coarsest partition refining both arguments.
    static Partition common(const Partition& a, const Partition& b);

    int num_blocks() const { return static_cast<int>(block_chars_.size()); }
    int block_of_index(int symbol_idx) const { return block_of_[static_cast<std::size_t>(symbol_idx)]; }
    int block_of_char(char c) const;
    const std::string& block_chars(int block) const { return block_chars_[static_cast<std::size_t>(block)]; }
    int block_size(int block) const { return static_cast<int>(block_chars_[static_cast<std::size_t>(block)].size()); }

    // Blocks whose symbols all lie in `s`. Throws if `s` cuts through a block;
    // callers must refine first.
    std::vector<int> blocks_within(const CharSet& s) const;
    bool splits(const CharSet& s) const;      // true when `s` cuts some block

    bool operator==(const Partition& other) const { return block_of_ == other.block_of_; }

private:
    std::array<std::uint8_t, kAlphabetSize> block_of_{};
    std::vector<std::string> block_chars_;
    void rebuild_chars();
};

} // namespace streg
