#pragma once

// Packed words over small alphabets.
//
// Letters are alphabet indices in {0..k-1}, stored 4 bits apiece (k <= 16).
// Binary words render as 0/1 strings; words over larger alphabets render
// as A,B,C,... unless they were parsed from digits. The total order on
// words is plain lexicographic on letter indices, with a proper prefix
// sorting first; every "lexicographically least" convention in this
// library refers to that order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shufsq {

class Word {
public:
    static constexpr int max_alphabet = 16;

    Word() = default;

    /// Word from explicit letter indices; throws std::invalid_argument if a
    /// letter is out of range or the alphabet size is unsupported.
    Word(std::span<const int> letters, int alphabet_size);
    Word(std::initializer_list<int> letters, int alphabet_size);

    /// Parses "0011", "012210" or "AABB". Digits and capital letters cannot
    /// be mixed. Throws std::invalid_argument on bad input.
    static Word parse(std::string_view text);

    /// Binary word from the low `length` bits of `bits`; bit (length-1) is
    /// the first letter.
    static Word from_bits(std::uint32_t bits, int length);

    int length() const { return length_; }
    int alphabet_size() const { return alphabet_size_; }
    bool empty() const { return length_ == 0; }
    bool is_binary() const { return alphabet_size_ <= 2; }
    bool renders_as_letters() const { return letter_style_; }

    int letter(int i) const;
    std::vector<int> letters() const;

    /// Letter counts indexed by letter.
    std::vector<int> counts() const;

    /// Bit packing of a binary word, first letter at bit (length-1).
    std::uint32_t to_bits() const;

    Word reversed() const;
    /// Moves the first j letters to the end.
    Word rotated_left(int j) const;
    /// Binary complement (0 <-> 1).
    Word complemented() const;
    /// Relabels letters through letter_map (a value per letter index).
    Word mapped_letters(std::span<const int> letter_map) const;
    Word appended(const Word& tail) const;
    /// Subword at the given strictly increasing positions.
    Word subword(std::span<const int> positions) const;

    std::string to_string() const;

    bool operator==(const Word& other) const;
    std::strong_ordering operator<=>(const Word& other) const;

    std::size_t hash() const;

private:
    Word(int length, int alphabet_size, bool letter_style);
    void set_letter(int i, int value);
    static bool default_letter_style(int alphabet_size) { return alphabet_size > 2; }

    std::vector<std::uint64_t> blocks_;
    int length_ = 0;
    int alphabet_size_ = 1;
    bool letter_style_ = false;

    friend Word word_with_style(const Word& w, bool letter_style);
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Copy of w that renders with A,B,C,... (or digits when false).
Word word_with_style(const Word& w, bool letter_style);

/// True iff every letter occurs an even number of times in w.
bool is_even_word(const Word& w);

/// All length(w) circular shifts of w, with multiplicity, in shift order.
std::vector<Word> cyclic_shifts(const Word& w);

/// Smallest p > 0 with rotated_left(p) == w; divides length(w).
int word_period(const Word& w);

} // namespace shufsq

template <>
struct std::hash<shufsq::Word> {
    std::size_t operator()(const shufsq::Word& w) const { return w.hash(); }
};
