#pragma once

// Exhaustive counts of binary shuffle squares by length and number of 1's,
// the closed form for two 1's, and the subsequence characterization of
// canonical shuffle squares. Counts come from running the decider over
// every word; the closed forms act as independent cross-checks in tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shufsq/shuffle.hpp"
#include "shufsq/word.hpp"

namespace shufsq {

class CountTable {
public:
    CountTable(int max_length, std::vector<std::vector<std::uint64_t>> rows);

    int max_length() const { return max_length_; }
    /// Number of binary shuffle squares of length two_n with two_k 1's.
    std::uint64_t entry(int two_n, int two_k) const;
    /// Number of binary shuffle squares of length two_n.
    std::uint64_t total(int two_n) const;

private:
    int max_length_;
    std::vector<std::vector<std::uint64_t>> rows_; // rows_[n-1][k], k = 0..n
    std::vector<std::uint64_t> totals_;
};

/// Exact counts by deciding every binary word of each even length up to
/// max_length. The (2k <-> 2n-2k) symmetry is verified afterwards, not
/// assumed.
CountTable count_table(int max_length, int workers = 0);

/// 3n(n-1)/2 + 1, the number of binary shuffle squares of length 2n with
/// exactly two 1's.
std::uint64_t two_ones_closed_form(int n);

/// Number of binary shuffle squares of the given even length, by direct
/// decision over all words.
std::uint64_t total_shuffle_squares(int length, int workers = 0);

/// True iff some four positions of w spell X,Y,Y,X as a subsequence (X, Y
/// single letters). Runs in O(length^2) over letter pairs.
bool has_xyyx_subword(const Word& w);

/// Number of canonical words over k letters that are shuffle squares;
/// equals catalan(k).
std::uint64_t canonical_shuffle_square_count(int k);

/// Fast-path witness for canonical words: color the first occurrence of
/// each letter as the first copy. Succeeds exactly on canonical shuffle
/// squares; the resulting coloring pattern is a Dyck word.
std::optional<SplitWitness> canonical_greedy_witness(const Word& w);

std::uint64_t catalan(int k);

/// CSV with one row per 1-count (2k), one column per length (2n), and a
/// final row of per-length totals.
std::string count_table_to_csv(const CountTable& table);

} // namespace shufsq
