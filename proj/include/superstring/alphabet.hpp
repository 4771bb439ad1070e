#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "superstring/errors.hpp"

namespace superstring {

// Base symbols are the lowercase ASCII letters a-z; each has a barred mirror
// written as the corresponding uppercase letter (bar(a) = A). The symbol order
// puts every base symbol below every barred symbol, so plain ASCII comparison
// is NOT the right order for mixed strings.

constexpr int kMaxAlphabetSize = 26;

constexpr bool is_base_symbol(char ch) { return ch >= 'a' && ch <= 'z'; }
constexpr bool is_barred_symbol(char ch) { return ch >= 'A' && ch <= 'Z'; }
constexpr bool is_symbol(char ch) { return is_base_symbol(ch) || is_barred_symbol(ch); }

constexpr char bar_symbol(char ch) { return static_cast<char>(ch - 'a' + 'A'); }
constexpr char unbar_symbol(char ch) { return static_cast<char>(ch - 'A' + 'a'); }

constexpr int symbol_rank(char ch) {
    return is_base_symbol(ch) ? ch - 'a' : kMaxAlphabetSize + (ch - 'A');
}

constexpr bool symbol_less(char a, char b) { return symbol_rank(a) < symbol_rank(b); }

// Lexicographic comparison under the symbol order above.
inline bool rank_less(std::string_view a, std::string_view b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](char x, char y) { return symbol_less(x, y); });
}

/// A prefix of a-z together with its barred mirror.
class Alphabet {
public:
    explicit Alphabet(int base_size = kMaxAlphabetSize) : base_size_(base_size) {
        if (base_size < 1 || base_size > kMaxAlphabetSize)
            throw ConfigError("alphabet base size must be in [1, 26]");
    }

    int base_size() const { return base_size_; }

    char base_at(int i) const { return static_cast<char>('a' + i); }

    bool contains(char ch) const {
        if (is_base_symbol(ch)) return ch - 'a' < base_size_;
        if (is_barred_symbol(ch)) return ch - 'A' < base_size_;
        return false;
    }

    char bar(char ch) const {
        if (!is_base_symbol(ch) || !contains(ch))
            throw MixedAlphabet(std::string("cannot bar symbol '") + ch + "'");
        return bar_symbol(ch);
    }

    char unbar(char ch) const {
        if (!is_barred_symbol(ch) || !contains(ch))
            throw MixedAlphabet(std::string("cannot unbar symbol '") + ch + "'");
        return unbar_symbol(ch);
    }

private:
    int base_size_;
};

}  // namespace superstring
