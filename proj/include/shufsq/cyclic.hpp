#pragma once

// Constructions on even binary words: balanced middle windows, cyclic
// split witnesses, shift-to-shuffle-square, the s statistic (number of
// circular shifts that are shuffle squares), and the exhaustive
// anti-square scan with checkpointing.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shufsq/shuffle.hpp"
#include "shufsq/word.hpp"

namespace shufsq {

/// w = x v y where both v and xy carry exactly half of each letter count.
struct FairSplit {
    Word x, v, y;
    int window_start = 0;
};

/// Finds a contiguous window v of length n = length(w)/2 with exactly half
/// the 0's and half the 1's, by sliding the window one step at a time (the
/// counts change by at most one per step, so a balanced window always
/// exists). Input must be an even binary word of length >= 2.
FairSplit fair_split_binary(const Word& w);

/// Splits an even binary word into two subwords A, B with A = gamma(B) for
/// a rotation gamma: A takes the 0's of x, the 1's of v and the 0's of y,
/// B takes the complementary letters, and both sort to 0^r 1^s under
/// rotations. The empty word gets an empty witness.
SplitWitness cyclic_decompose(const Word& w);

struct ShiftResult {
    int shift = 0;
    /// Set when the run-structure analysis failed and the shift had to be
    /// found by exhaustive search; never expected.
    bool used_fallback = false;
};

/// A rotation amount j such that moving the first j letters of w to the
/// end yields a shuffle square. Input: even binary word with at most four
/// 1's. The shift comes from a case analysis of the cyclic run structure
/// and is verified before being returned.
ShiftResult shift_to_shuffle_square(const Word& w);

/// Number of elements of the multiset of circular shifts of w that are
/// shuffle squares (computed on distinct shifts, expanded by the period).
int s_of(const Word& w);

/// Even word none of whose circular shifts is a shuffle square.
bool is_anti_square(const Word& w);

struct AntiSquareReport {
    int length = 0;
    int s_min = 0;
    /// Orbit representatives (shifts x reversal x complement) with minimal
    /// s, sorted.
    std::vector<Word> representatives;
    bool complete = true;
    std::uint64_t scanned = 0;

    std::uint64_t class_count() const { return representatives.size(); }
};

struct ScanOptions {
    int workers = 0;                          // 0 = default
    std::string checkpoint_path;              // empty = no checkpointing
    std::uint64_t checkpoint_every = 1ull << 20;
    /// Testing knob: stop (with a checkpoint, if configured) after this
    /// many representatives. 0 = run to completion.
    std::uint64_t stop_after = 0;
    bool resume = true;
};

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scans every even binary word of the given length, one representative
/// per symmetry orbit, and reports the minimum s value together with all
/// minimal classes. Resumes from options.checkpoint_path when present.
AntiSquareReport anti_square_scan(int length, const ScanOptions& options = {});

/// Line format: header `length=.. s_min=.. classes=..`, then one
/// representative per line.
std::string anti_square_report_to_text(const AntiSquareReport& report);

// ---- bit-packed helpers (first letter at bit length-1) ----

std::uint32_t rotate_bits_left(std::uint32_t bits, int length, int j);
std::uint32_t reverse_bits(std::uint32_t bits, int length);
int period_bits(std::uint32_t bits, int length);

/// Lexicographically next binary necklace (minimal rotation) of the given
/// length; nullopt when exhausted. Pass nullopt to start at 0^length.
std::optional<std::uint32_t> next_necklace(std::optional<std::uint32_t> current,
                                           int length);

/// True iff bits is the least word in its orbit under rotations, reversal
/// and complement. Assumes bits is already a necklace.
bool necklace_is_orbit_representative(std::uint32_t bits, int length);

} // namespace shufsq
