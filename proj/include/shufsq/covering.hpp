#pragma once

// The bipartite graph between canonical words and reduced permutations,
// exact minimum covering sets, and the conjecture-verification scans.

#include <span>
#include <string>
#include <vector>

#include "shufsq/permutation.hpp"
#include "shufsq/word.hpp"

namespace shufsq {

/// Words on one side, permutations (one per inverse pair) on the other;
/// adjacency[w] lists the indices of perms gamma for which words[w] is a
/// shuffle gamma-square.
struct CoverInstance {
    std::vector<Word> words;
    std::vector<Permutation> perms;
    std::vector<std::vector<int>> adjacency;
};

struct CoverSolution {
    std::vector<Permutation> chosen;
    int size = 0;
    bool optimal = false;
};

/// One representative per pair {gamma, gamma^-1}: the lexicographically
/// smaller one-line form; involutions stay. Order and duplicates of the
/// input are normalized away.
std::vector<Permutation> reduce_permutations(std::span<const Permutation> perms);

/// Canonical words over k letters against the reduced symmetric group of
/// degree k, adjacency decided exactly. Practical for k <= 6.
CoverInstance build_cover_instance(int k, int workers = 0);

/// Exact minimum covering set by branch and bound; the chosen set is the
/// lexicographically least among all optimal ones. Throws
/// std::invalid_argument naming the first word with empty adjacency.
CoverSolution min_cover(const CoverInstance& instance);

/// True iff every word of the instance has a neighbor in candidate.
bool verify_cover(const CoverInstance& instance,
                  std::span<const Permutation> candidate);

/// Matrix text: header `word,<perm>,...`, then one 0/1 row per word.
std::string cover_instance_to_matrix(const CoverInstance& instance);

/// Even words over the alphabet that are NOT shuffle gamma-squares for any
/// polygon symmetry gamma, one representative per orbit under alphabet
/// relabeling and reversal, for every even length up to max_length.
/// An empty result means every scanned word is a dihedral shuffle square.
std::vector<Word> dihedral_scan(int max_length, int alphabet_size = 3,
                                int workers = 0);

/// Subset of perms gamma (acting on all of w) for which gamma(w) is a
/// shuffle square. All perms must have degree length(w).
std::vector<Permutation> whole_word_transform_scan(
    const Word& w, std::span<const Permutation> perms);

} // namespace shufsq
