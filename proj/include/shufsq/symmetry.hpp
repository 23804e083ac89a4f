#pragma once

// Symmetry orbits of words under circular shifts, reversal and alphabet
// relabeling, and the canonical double-occurrence words.

#include <cstdint>
#include <vector>

#include "shufsq/word.hpp"

namespace shufsq {

struct GroupSpec {
    bool cyclic_shifts = true;
    bool reversal = true;
    bool alphabet_permutation = true;
};

struct SymmetryClass {
    Word representative;
    std::uint64_t orbit_size = 0;
    GroupSpec group;
};

/// All distinct images of w under the selected symmetries, sorted.
std::vector<Word> orbit_members(const Word& w, GroupSpec spec);

/// Lexicographically least image of w plus the orbit size.
SymmetryClass orbit_representative(const Word& w, GroupSpec spec);

/// True iff every letter of w occurs exactly twice and first occurrences
/// appear in increasing alphabet order.
bool is_canonical_word(const Word& w);

/// All canonical words over k letters in lexicographic order; there are
/// (2k)!/(k! 2^k) of them.
std::vector<Word> enumerate_canonical_words(int k);

/// (2k)!/(k! 2^k).
std::uint64_t canonical_word_count(int k);

} // namespace shufsq
