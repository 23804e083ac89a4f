#include "shufsq/covering.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "parallel.hpp"
#include "shufsq/shuffle.hpp"
#include "shufsq/symmetry.hpp"

namespace shufsq {

namespace {

using Mask = std::vector<std::uint64_t>;

Mask make_mask(std::size_t bits) { return Mask((bits + 63) / 64, 0); }

void mask_set(Mask& m, std::size_t i) { m[i / 64] |= 1ull << (i % 64); }

int mask_popcount(const Mask& m) {
    int total = 0;
    for (std::uint64_t b : m) total += std::popcount(b);
    return total;
}

bool mask_all_zero(const Mask& m) {
    for (std::uint64_t b : m)
        if (b) return false;
    return true;
}

void mask_and_not(Mask& m, const Mask& other) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] &= ~other[i];
}

int mask_and_popcount(const Mask& a, const Mask& b) {
    int total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

// Phase 1: exact minimum size. Branches include/exclude on the
// permutation covering the most still-uncovered words; the lower bound is
// ceil(uncovered / best residual coverage).
struct SizeSearch {
    const std::vector<Mask>* columns = nullptr;
    int perm_count = 0;
    int best_size = 0;
    std::vector<int> chosen;
    std::vector<int> best;
    std::vector<char> banned;

    void run(const Mask& uncovered) {
        if (mask_all_zero(uncovered)) {
            if (static_cast<int>(chosen.size()) < best_size) {
                best = chosen;
                best_size = static_cast<int>(chosen.size());
            }
            return;
        }
        int remaining = mask_popcount(uncovered);
        int pick = -1, pick_cov = 0;
        for (int p = 0; p < perm_count; ++p) {
            if (banned[p]) continue;
            int cov = mask_and_popcount((*columns)[p], uncovered);
            if (cov > pick_cov) {
                pick_cov = cov;
                pick = p;
            }
        }
        if (pick < 0) return;
        int lower = (remaining + pick_cov - 1) / pick_cov;
        if (static_cast<int>(chosen.size()) + lower >= best_size) return;

        Mask next = uncovered;
        mask_and_not(next, (*columns)[pick]);
        chosen.push_back(pick);
        run(next);
        chosen.pop_back();

        banned[pick] = 1;
        run(uncovered);
        banned[pick] = 0;
    }
};

// Phase 2: first cover of the known optimal size found when subsets are
// enumerated in lexicographic order of their index sequences.
struct LexSearch {
    const std::vector<Mask>* columns = nullptr;
    int perm_count = 0;
    int target_size = 0;
    std::vector<int> chosen;

    bool run(const Mask& uncovered, int from) {
        if (mask_all_zero(uncovered))
            return true;
        int remaining = mask_popcount(uncovered);
        int best_cov = 0;
        for (int p = from; p < perm_count; ++p)
            best_cov = std::max(best_cov, mask_and_popcount((*columns)[p], uncovered));
        if (best_cov == 0) return false;
        int lower = (remaining + best_cov - 1) / best_cov;
        if (static_cast<int>(chosen.size()) + lower > target_size) return false;
        for (int p = from; p < perm_count; ++p) {
            if (mask_and_popcount((*columns)[p], uncovered) == 0) continue;
            Mask next = uncovered;
            mask_and_not(next, (*columns)[p]);
            chosen.push_back(p);
            if (run(next, p + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

std::vector<Permutation> reduce_permutations(std::span<const Permutation> perms) {
    std::vector<Permutation> out;
    out.reserve(perms.size());
    for (const auto& gamma : perms) {
        Permutation inv = gamma.inverse();
        out.push_back(gamma <= inv ? gamma : inv);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CoverInstance build_cover_instance(int k, int workers) {
    if (k < 1 || k > 6)
        throw std::invalid_argument("build_cover_instance: 1 <= k <= 6 required");
    CoverInstance instance;
    instance.words = enumerate_canonical_words(k);
    auto symmetric = group_members(GroupKind::symmetric, k);
    instance.perms = reduce_permutations(symmetric);
    instance.adjacency.assign(instance.words.size(), {});

    detail::parallel_chunks(
        0, instance.words.size(), detail::resolve_workers(workers),
        [&](int, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i)
                for (std::size_t p = 0; p < instance.perms.size(); ++p)
                    if (is_gamma_shuffle_square(instance.words[i], instance.perms[p]))
                        instance.adjacency[i].push_back(static_cast<int>(p));
        });
    return instance;
}

CoverSolution min_cover(const CoverInstance& instance) {
    if (instance.words.empty())
        throw std::invalid_argument("min_cover: empty instance");
    for (std::size_t i = 0; i < instance.words.size(); ++i)
        if (instance.adjacency[i].empty())
            throw std::invalid_argument("min_cover: word " +
                                        instance.words[i].to_string() +
                                        " has no neighbors");

    int perm_count = static_cast<int>(instance.perms.size());
    std::vector<Mask> columns(perm_count, make_mask(instance.words.size()));
    for (std::size_t i = 0; i < instance.words.size(); ++i)
        for (int p : instance.adjacency[i]) mask_set(columns[p], i);

    Mask all = make_mask(instance.words.size());
    for (std::size_t i = 0; i < instance.words.size(); ++i) mask_set(all, i);

    SizeSearch search;
    search.columns = &columns;
    search.perm_count = perm_count;
    search.best_size = perm_count + 1;
    search.banned.assign(perm_count, 0);
    search.run(all);

    LexSearch lex;
    lex.columns = &columns;
    lex.perm_count = perm_count;
    lex.target_size = search.best_size;
    lex.run(all, 0);
    const std::vector<int>& picked = lex.chosen.empty() ? search.best : lex.chosen;

    CoverSolution solution;
    solution.size = static_cast<int>(picked.size());
    solution.optimal = true;
    for (int p : picked) solution.chosen.push_back(instance.perms[p]);
    std::sort(solution.chosen.begin(), solution.chosen.end());
    return solution;
}

bool verify_cover(const CoverInstance& instance,
                  std::span<const Permutation> candidate) {
    std::vector<bool> in_candidate(instance.perms.size(), false);
    for (const auto& gamma : candidate) {
        auto it = std::lower_bound(instance.perms.begin(), instance.perms.end(), gamma);
        if (it == instance.perms.end() || !(*it == gamma))
            throw std::invalid_argument("verify_cover: candidate not in instance");
        in_candidate[it - instance.perms.begin()] = true;
    }
    for (const auto& adj : instance.adjacency) {
        bool covered = false;
        for (int p : adj)
            if (in_candidate[p]) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

std::string cover_instance_to_matrix(const CoverInstance& instance) {
    std::string out = "word";
    for (const auto& gamma : instance.perms) out += "," + gamma.to_string();
    out.push_back('\n');
    for (std::size_t i = 0; i < instance.words.size(); ++i) {
        out += instance.words[i].to_string();
        std::size_t next = 0;
        for (std::size_t p = 0; p < instance.perms.size(); ++p) {
            bool adjacent = next < instance.adjacency[i].size() &&
                            instance.adjacency[i][next] == static_cast<int>(p);
            if (adjacent) ++next;
            out += adjacent ? ",1" : ",0";
        }
        out.push_back('\n');
    }
    return out;
}

namespace {

// Lexicographic minimality of w under relabeling x reversal, without
// materializing the images.
bool is_relabel_reversal_representative(const Word& w,
                                        std::span<const std::vector<int>> maps) {
    int len = w.length();
    for (const auto& m : maps) {
        for (int dir = 0; dir < 2; ++dir) {
            for (int i = 0; i < len; ++i) {
                int image = m[w.letter(dir == 0 ? i : len - 1 - i)];
                int orig = w.letter(i);
                if (image != orig) {
                    if (image < orig) return false;
                    break;
                }
            }
        }
    }
    return true;
}

} // namespace

std::vector<Word> dihedral_scan(int max_length, int alphabet_size, int workers) {
    if (max_length < 2 || max_length % 2 != 0)
        throw std::invalid_argument("dihedral_scan: even max_length >= 2 required");
    if (alphabet_size < 1 || alphabet_size > 6)
        throw std::invalid_argument("dihedral_scan: alphabet size in 1..6 required");

    std::vector<std::vector<int>> maps;
    {
        std::vector<int> m(alphabet_size);
        std::iota(m.begin(), m.end(), 0);
        do {
            maps.push_back(m);
        } while (std::next_permutation(m.begin(), m.end()));
    }

    std::vector<Word> violating;
    for (int len = 2; len <= max_length; len += 2) {
        auto dihedral = group_members(GroupKind::dihedral, len / 2);
        std::uint64_t total = 1;
        for (int i = 0; i < len; ++i) total *= alphabet_size;

        int nworkers = detail::resolve_workers(workers);
        std::vector<std::vector<Word>> found(nworkers);
        detail::parallel_chunks(
            0, total, nworkers,
            [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
                std::vector<int> letters(len);
                for (std::uint64_t code = lo; code < hi; ++code) {
                    std::uint64_t rest = code;
                    for (int i = len - 1; i >= 0; --i) {
                        letters[i] = static_cast<int>(rest % alphabet_size);
                        rest /= alphabet_size;
                    }
                    Word w(std::span<const int>(letters), alphabet_size);
                    if (!is_even_word(w)) continue;
                    if (!is_relabel_reversal_representative(w, maps)) continue;
                    bool covered = false;
                    for (const auto& gamma : dihedral)
                        if (is_gamma_shuffle_square(w, gamma)) {
                            covered = true;
                            break;
                        }
                    if (!covered) found[chunk].push_back(w);
                }
            });
        for (auto& chunk : found)
            violating.insert(violating.end(), chunk.begin(), chunk.end());
    }
    std::sort(violating.begin(), violating.end(),
              [](const Word& a, const Word& b) {
                  return a.length() != b.length() ? a.length() < b.length()
                                                  : a < b;
              });
    return violating;
}

std::vector<Permutation> whole_word_transform_scan(
    const Word& w, std::span<const Permutation> perms) {
    std::vector<Permutation> out;
    for (const auto& gamma : perms) {
        if (gamma.degree() != w.length())
            throw std::invalid_argument(
                "whole_word_transform_scan: permutation degree must equal word length");
        if (is_shuffle_square(gamma.apply(w))) out.push_back(gamma);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace shufsq
