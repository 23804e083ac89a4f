#pragma once

// One-line permutations of {1..n} and the permutation groups used for
// generalized shuffle squares. Text I/O is 1-based ("231"; comma-separated
// from degree 10 up); the internal mapping is 0-based.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shufsq/word.hpp"

namespace shufsq {

class Permutation {
public:
    Permutation() = default;

    /// From a 0-based mapping; throws std::invalid_argument unless it is a
    /// bijection on {0..n-1}.
    explicit Permutation(std::vector<int> mapping);

    static Permutation identity(int n);
    /// i -> i + shift (mod n): applying it rotates a word left by `shift`.
    static Permutation rotation(int n, int shift);
    /// i -> c - i (mod n), the polygon reflections.
    static Permutation reflection(int n, int c);
    static Permutation parse(std::string_view text);

    int degree() const { return static_cast<int>(mapping_.size()); }
    int map(int i) const { return mapping_[i]; }
    const std::vector<int>& mapping() const { return mapping_; }

    Permutation inverse() const;
    bool is_identity() const;
    bool is_involution() const;
    /// True iff this equals rotation(n, t) for some t.
    bool is_rotation() const;

    /// gamma(W) = w_{g_1} w_{g_2} ... w_{g_n} in the 1-based notation.
    Word apply(const Word& w) const;

    std::string to_string() const;

    bool operator==(const Permutation&) const = default;
    std::strong_ordering operator<=>(const Permutation& other) const {
        return mapping_ <=> other.mapping_;
    }

private:
    std::vector<int> mapping_;
};

enum class GroupKind { cyclic, dihedral, symmetric };

/// The n rotations, the polygon symmetries, or all n! permutations of
/// degree n, sorted with duplicates removed. (The dihedral list has 2n
/// members for n >= 3 and degenerates to 1 resp. 2 for n = 1, 2.)
std::vector<Permutation> group_members(GroupKind kind, int n);

} // namespace shufsq
