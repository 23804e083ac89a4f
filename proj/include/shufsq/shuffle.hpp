#pragma once

// Exact deciders for shuffle squares and shuffle gamma-squares, with
// extractable split witnesses. Recognition is NP-complete in general, so
// the deciders are exact searches with memoization/pruning; they are meant
// for desk-scale words.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shufsq/permutation.hpp"
#include "shufsq/word.hpp"

namespace shufsq {

/// A split of a word of length 2n into two disjoint subwords: the letters
/// at first_positions equal gamma applied to the letters at
/// second_positions.
struct SplitWitness {
    std::vector<int> first_positions;
    std::vector<int> second_positions;
    Permutation gamma;
};

/// Structural validity: two disjoint strictly increasing sequences of equal
/// length partitioning {0..len-1}, with first = gamma(second).
bool witness_is_valid(const Word& w, const SplitWitness& witness);

/// One-line record form: `first=[0,2] second=[1,3] gamma=12`. Positions
/// are 0-based; the permutation keeps its 1-based one-line notation.
std::string witness_to_record(const SplitWitness& witness);

/// Splits w into two identical disjoint subwords if possible. The returned
/// witness has gamma = identity and the lexicographically least
/// first_positions over all valid splits. Odd length or an odd letter
/// count yields nullopt.
std::optional<SplitWitness> is_shuffle_square(const Word& w);

/// Fast path for binary words packed into bits (first letter at bit
/// length-1).
bool shuffle_square_bits(std::uint32_t bits, int length);

/// True iff w is an interleaving of u and v as disjoint subsequences.
/// Throws std::invalid_argument unless length(w) = length(u) + length(v).
bool is_shuffle_of(const Word& w, const Word& u, const Word& v);

/// Splits w into subwords U, V with U = gamma(V) if possible; the witness
/// stores gamma with first = gamma(second). Since a split with
/// V = gamma(U) is the same split read the other way, one orientation
/// decides gamma-similarity in both directions. Requires length(w) even
/// and degree(gamma) = length(w)/2.
std::optional<SplitWitness> is_gamma_shuffle_square(const Word& w,
                                                    const Permutation& gamma);

/// Subset of candidates gamma for which w is a shuffle gamma-square,
/// sorted. All candidates must have degree length(w)/2.
std::vector<Permutation> gamma_neighbors(const Word& w,
                                         std::span<const Permutation> candidates);

/// Closed-form decision for binary words with exactly two 1's and even
/// length 2n: such a word is a shuffle square iff either the two 1's are
/// adjacent and preceded by an even number of 0's, or the gap between them
/// is between 1 and n-1 zeros. Throws std::invalid_argument when the
/// precondition fails.
bool two_ones_shuffle_square(const Word& w);

} // namespace shufsq
