#include "shufsq/word.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace shufsq {

namespace {

constexpr int kLettersPerBlock = 16;

void check_alphabet(int alphabet_size) {
    if (alphabet_size < 1 || alphabet_size > Word::max_alphabet)
        throw std::invalid_argument("alphabet size must be in 1.." +
                                    std::to_string(Word::max_alphabet));
}

} // namespace

Word::Word(int length, int alphabet_size, bool letter_style)
    : blocks_((length + kLettersPerBlock - 1) / kLettersPerBlock, 0),
      length_(length),
      alphabet_size_(alphabet_size),
      letter_style_(letter_style) {}

Word::Word(std::span<const int> letters, int alphabet_size)
    : Word(static_cast<int>(letters.size()), alphabet_size,
           default_letter_style(alphabet_size)) {
    check_alphabet(alphabet_size);
    for (int i = 0; i < length_; ++i) {
        if (letters[i] < 0 || letters[i] >= alphabet_size)
            throw std::invalid_argument("letter index out of range");
        set_letter(i, letters[i]);
    }
}

Word::Word(std::initializer_list<int> letters, int alphabet_size)
    : Word(std::span<const int>(letters.begin(), letters.size()), alphabet_size) {}

Word Word::parse(std::string_view text) {
    bool saw_digit = false;
    bool saw_upper = false;
    std::vector<int> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            saw_digit = true;
            letters.push_back(c - '0');
        } else if (c >= 'A' && c <= 'Z') {
            saw_upper = true;
            letters.push_back(c - 'A');
        } else {
            throw std::invalid_argument(std::string("bad character '") + c +
                                        "' in word");
        }
    }
    if (saw_digit && saw_upper)
        throw std::invalid_argument("mixed digit/letter alphabets in word");
    int k = saw_digit ? 2 : 1; // digit words are binary unless a digit >= 2 appears
    for (int v : letters) k = std::max(k, v + 1);
    if (k > max_alphabet)
        throw std::invalid_argument("alphabet too large (letters beyond 'P')");
    Word w(std::span<const int>(letters), k);
    w.letter_style_ = saw_upper;
    return w;
}

Word Word::from_bits(std::uint32_t bits, int length) {
    if (length < 0 || length > 32)
        throw std::invalid_argument("bit word length must be in 0..32");
    Word w(length, 2, false);
    for (int i = 0; i < length; ++i)
        w.set_letter(i, (bits >> (length - 1 - i)) & 1u);
    return w;
}

int Word::letter(int i) const {
    return static_cast<int>((blocks_[i / kLettersPerBlock] >>
                             (4 * (i % kLettersPerBlock))) &
                            0xFull);
}

void Word::set_letter(int i, int value) {
    std::uint64_t& block = blocks_[i / kLettersPerBlock];
    int shift = 4 * (i % kLettersPerBlock);
    block = (block & ~(0xFull << shift)) |
            (static_cast<std::uint64_t>(value) << shift);
}

std::vector<int> Word::letters() const {
    std::vector<int> out(length_);
    for (int i = 0; i < length_; ++i) out[i] = letter(i);
    return out;
}

std::vector<int> Word::counts() const {
    std::vector<int> out(alphabet_size_, 0);
    for (int i = 0; i < length_; ++i) ++out[letter(i)];
    return out;
}

std::uint32_t Word::to_bits() const {
    if (!is_binary() || length_ > 32)
        throw std::invalid_argument("to_bits requires a binary word of length <= 32");
    std::uint32_t bits = 0;
    for (int i = 0; i < length_; ++i)
        bits |= static_cast<std::uint32_t>(letter(i)) << (length_ - 1 - i);
    return bits;
}

Word Word::reversed() const {
    Word out(length_, alphabet_size_, letter_style_);
    for (int i = 0; i < length_; ++i) out.set_letter(i, letter(length_ - 1 - i));
    return out;
}

Word Word::rotated_left(int j) const {
    if (length_ == 0) return *this;
    j = ((j % length_) + length_) % length_;
    Word out(length_, alphabet_size_, letter_style_);
    for (int i = 0; i < length_; ++i) out.set_letter(i, letter((i + j) % length_));
    return out;
}

Word Word::complemented() const {
    if (alphabet_size_ > 2)
        throw std::invalid_argument("complement requires a binary word");
    Word out(length_, 2, letter_style_);
    for (int i = 0; i < length_; ++i) out.set_letter(i, 1 - letter(i));
    return out;
}

Word Word::mapped_letters(std::span<const int> letter_map) const {
    if (static_cast<int>(letter_map.size()) < alphabet_size_)
        throw std::invalid_argument("letter map smaller than alphabet");
    Word out(length_, alphabet_size_, letter_style_);
    for (int i = 0; i < length_; ++i) {
        int v = letter_map[letter(i)];
        if (v < 0 || v >= alphabet_size_)
            throw std::invalid_argument("letter map value out of range");
        out.set_letter(i, v);
    }
    return out;
}

Word Word::appended(const Word& tail) const {
    int k = std::max(alphabet_size_, tail.alphabet_size_);
    Word out(length_ + tail.length_, k, letter_style_);
    for (int i = 0; i < length_; ++i) out.set_letter(i, letter(i));
    for (int i = 0; i < tail.length_; ++i) out.set_letter(length_ + i, tail.letter(i));
    return out;
}

Word Word::subword(std::span<const int> positions) const {
    Word out(static_cast<int>(positions.size()), alphabet_size_, letter_style_);
    int prev = -1;
    for (int i = 0; i < out.length_; ++i) {
        int pos = positions[i];
        if (pos <= prev || pos >= length_)
            throw std::invalid_argument("subword positions must be strictly increasing");
        out.set_letter(i, letter(pos));
        prev = pos;
    }
    return out;
}

std::string Word::to_string() const {
    std::string out;
    out.reserve(length_);
    for (int i = 0; i < length_; ++i)
        out.push_back(letter_style_ ? static_cast<char>('A' + letter(i))
                                    : static_cast<char>('0' + letter(i)));
    return out;
}

bool Word::operator==(const Word& other) const {
    return length_ == other.length_ && alphabet_size_ == other.alphabet_size_ &&
           blocks_ == other.blocks_;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    int n = std::min(length_, other.length_);
    for (int i = 0; i < n; ++i) {
        int a = letter(i), b = other.letter(i);
        if (a != b) return a <=> b;
    }
    if (length_ != other.length_) return length_ <=> other.length_;
    return alphabet_size_ <=> other.alphabet_size_;
}

std::size_t Word::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(length_));
    mix(static_cast<std::uint64_t>(alphabet_size_));
    for (std::uint64_t b : blocks_) mix(b);
    return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.to_string();
}

Word word_with_style(const Word& w, bool letter_style) {
    Word out = w;
    out.letter_style_ = letter_style;
    return out;
}

bool is_even_word(const Word& w) {
    for (int c : w.counts())
        if (c % 2 != 0) return false;
    return true;
}

std::vector<Word> cyclic_shifts(const Word& w) {
    std::vector<Word> out;
    out.reserve(w.length());
    for (int j = 0; j < w.length(); ++j) out.push_back(w.rotated_left(j));
    return out;
}

int word_period(const Word& w) {
    int n = w.length();
    if (n == 0) return 0;
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = w.letter(i) == w.letter((i + p) % n);
        if (ok) return p;
    }
    return n;
}

} // namespace shufsq
