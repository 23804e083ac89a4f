#include "shufsq/shuffle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace shufsq {

namespace {

bool counts_all_even(const Word& w) {
    return w.length() % 2 == 0 && is_even_word(w);
}

// --------------------------------------------------------------------
// Binary recognizer.
//
// Depth-first search over states (i, overhang): positions < i have been
// assigned to the two copies, the shorter copy's letters are a prefix of
// the longer copy's, and the overhang is the unmatched tail of the longer
// copy. Appending to the longer copy extends the overhang; appending to
// the shorter one must match the overhang's front letter. A word is a
// shuffle square iff the overhang is empty after the last position.
//
// The overhang is encoded as a sentinel bit followed by its letters, front
// letter highest, so "extend" is a shift-in and the empty overhang is 1.
// Failed states go into a memo set; worst-case behaviour is exponential
// (the problem is NP-complete) but words up to 32 letters are fine.
// --------------------------------------------------------------------

struct BitsSearch {
    std::uint32_t bits = 0;
    int length = 0;
    // reused across calls on the same thread; cleared, not reallocated
    std::unordered_set<std::uint64_t>& failed;

    int letter(int i) const { return (bits >> (length - 1 - i)) & 1u; }

    bool run(int i, std::uint64_t overhang) {
        if (i == length) return overhang == 1;
        int m = std::bit_width(overhang) - 1;
        int remaining = length - i;
        if (m > remaining || (remaining - m) % 2 != 0) return false;
        std::uint64_t key = (overhang << 6) | static_cast<std::uint64_t>(i);
        if (failed.contains(key)) return false;

        std::uint64_t c = letter(i);
        if (m > 0) {
            std::uint64_t body = overhang ^ (1ull << m);
            std::uint64_t front = body >> (m - 1);
            if (front == c) {
                std::uint64_t consumed =
                    (1ull << (m - 1)) | (body & ((1ull << (m - 1)) - 1));
                if (run(i + 1, consumed)) return true;
            }
        }
        if (run(i + 1, (overhang << 1) | c)) return true;

        failed.insert(key);
        return false;
    }
};

// General-alphabet variant of the same search that records assignments so
// a witness can be extracted. Trying "first" before "second" at every
// position makes the first solution the lexicographically least
// first_positions.
struct WitnessSearch {
    const Word* w = nullptr;
    int length = 0;
    std::vector<int> first, second;
    std::unordered_set<std::string> failed;

    std::string state_key(int i) const {
        const auto& longer = first.size() >= second.size() ? first : second;
        std::size_t matched = std::min(first.size(), second.size());
        std::string key;
        key.reserve(longer.size() - matched + 2);
        key.push_back(static_cast<char>(i & 0xff));
        key.push_back(static_cast<char>((i >> 8) & 0xff));
        for (std::size_t j = matched; j < longer.size(); ++j)
            key.push_back(static_cast<char>(w->letter(longer[j])));
        return key;
    }

    bool run(int i) {
        int diff = static_cast<int>(first.size()) -
                   static_cast<int>(second.size());
        int m = diff < 0 ? -diff : diff;
        int remaining = length - i;
        if (i == length) return m == 0;
        if (m > remaining || (remaining - m) % 2 != 0) return false;
        std::string key = state_key(i);
        if (failed.contains(key)) return false;

        int c = w->letter(i);
        // into the first copy
        if (static_cast<int>(first.size()) < length / 2) {
            bool ok = diff >= 0 ||
                      c == w->letter(second[first.size()]);
            if (ok) {
                first.push_back(i);
                if (run(i + 1)) return true;
                first.pop_back();
            }
        }
        // into the second copy
        if (static_cast<int>(second.size()) < length / 2) {
            bool ok = diff <= 0 ||
                      c == w->letter(first[second.size()]);
            if (ok) {
                second.push_back(i);
                if (run(i + 1)) return true;
                second.pop_back();
            }
        }
        failed.insert(std::move(key));
        return false;
    }
};

// Backtracking for gamma-squares: positions are handed left to right to
// the next open slot of copy A or copy B under the constraint
// a[i] = b[gamma(i)]. Slots whose partner is already filled are checked on
// the spot; otherwise the partner slot becomes committed to the letter,
// and the per-letter commitments are matched against the letters still
// available in the suffix for pruning.
struct GammaSearch {
    const Word* w = nullptr;
    std::vector<int> g, ginv;
    int n = 0, length = 0, k = 0;
    std::vector<int> a_letter, b_letter;
    std::vector<int> pos_a, pos_b;
    std::vector<int> suffix_count; // per letter, positions >= current
    std::vector<int> committed;    // per letter, slots already forced to it

    bool feasible() const {
        for (int c = 0; c < k; ++c)
            if (committed[c] > suffix_count[c]) return false;
        return true;
    }

    bool run(int pos) {
        if (pos == length) return true;
        int c = w->letter(pos);
        int na = static_cast<int>(pos_a.size());
        int nb = static_cast<int>(pos_b.size());

        if (na < n) {
            int partner = g[na];
            bool ok = true, committed_here = false;
            if (partner < nb) {
                ok = b_letter[partner] == c;
                if (ok) --committed[c];
            } else {
                ++committed[c];
                committed_here = true;
            }
            if (ok) {
                a_letter[na] = c;
                pos_a.push_back(pos);
                --suffix_count[c];
                if (feasible() && run(pos + 1)) return true;
                ++suffix_count[c];
                pos_a.pop_back();
                if (committed_here)
                    --committed[c];
                else
                    ++committed[c];
            }
        }
        if (nb < n) {
            int partner = ginv[nb];
            bool ok = true, committed_here = false;
            if (partner < na) {
                ok = a_letter[partner] == c;
                if (ok) --committed[c];
            } else {
                ++committed[c];
                committed_here = true;
            }
            if (ok) {
                b_letter[nb] = c;
                pos_b.push_back(pos);
                --suffix_count[c];
                if (feasible() && run(pos + 1)) return true;
                ++suffix_count[c];
                pos_b.pop_back();
                if (committed_here)
                    --committed[c];
                else
                    ++committed[c];
            }
        }
        return false;
    }
};

} // namespace

bool witness_is_valid(const Word& w, const SplitWitness& witness) {
    int len = w.length();
    int n = len / 2;
    if (len % 2 != 0) return false;
    if (static_cast<int>(witness.first_positions.size()) != n) return false;
    if (static_cast<int>(witness.second_positions.size()) != n) return false;
    if (witness.gamma.degree() != n) return false;
    std::vector<bool> used(len, false);
    for (const auto* seq : {&witness.first_positions, &witness.second_positions}) {
        int prev = -1;
        for (int p : *seq) {
            if (p <= prev || p >= len || used[p]) return false;
            used[p] = true;
            prev = p;
        }
    }
    if (n == 0) return true;
    Word first = w.subword(witness.first_positions);
    Word second = w.subword(witness.second_positions);
    return first == witness.gamma.apply(second);
}

std::string witness_to_record(const SplitWitness& witness) {
    auto join = [](const std::vector<int>& v) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out.push_back(',');
            out += std::to_string(v[i]);
        }
        out.push_back(']');
        return out;
    };
    return "first=" + join(witness.first_positions) +
           " second=" + join(witness.second_positions) +
           " gamma=" + witness.gamma.to_string();
}

std::optional<SplitWitness> is_shuffle_square(const Word& w) {
    if (!counts_all_even(w)) return std::nullopt;
    if (w.empty()) return SplitWitness{{}, {}, Permutation()};
    WitnessSearch search;
    search.w = &w;
    search.length = w.length();
    if (!search.run(0)) return std::nullopt;
    return SplitWitness{std::move(search.first), std::move(search.second),
                        Permutation::identity(w.length() / 2)};
}

bool shuffle_square_bits(std::uint32_t bits, int length) {
    if (length % 2 != 0) return false;
    int ones = std::popcount(bits);
    if (ones % 2 != 0) return false;
    if (length == 0) return true;
    thread_local std::unordered_set<std::uint64_t> memo;
    memo.clear();
    BitsSearch search{bits, length, memo};
    return search.run(0, 1);
}

bool is_shuffle_of(const Word& w, const Word& u, const Word& v) {
    if (w.length() != u.length() + v.length())
        throw std::invalid_argument("interleaving length mismatch");
    int nu = u.length(), nv = v.length();
    // reachable[j] over rows i: w[0..i+j) splits into u[0..i) and v[0..j)
    std::vector<char> reachable(nv + 1, 0);
    reachable[0] = 1;
    for (int j = 1; j <= nv; ++j)
        reachable[j] = reachable[j - 1] && w.letter(j - 1) == v.letter(j - 1);
    for (int i = 1; i <= nu; ++i) {
        reachable[0] = reachable[0] && w.letter(i - 1) == u.letter(i - 1);
        for (int j = 1; j <= nv; ++j) {
            bool from_u = reachable[j] && w.letter(i + j - 1) == u.letter(i - 1);
            bool from_v = reachable[j - 1] && w.letter(i + j - 1) == v.letter(j - 1);
            reachable[j] = from_u || from_v;
        }
    }
    return reachable[nv];
}

std::optional<SplitWitness> is_gamma_shuffle_square(const Word& w,
                                                    const Permutation& gamma) {
    if (w.length() % 2 != 0 || gamma.degree() != w.length() / 2)
        throw std::invalid_argument(
            "gamma degree must equal half the word length");
    if (!counts_all_even(w)) return std::nullopt;
    if (w.empty()) return SplitWitness{{}, {}, Permutation()};

    GammaSearch search;
    search.w = &w;
    search.n = gamma.degree();
    search.length = w.length();
    search.k = w.alphabet_size();
    search.g = gamma.mapping();
    search.ginv = gamma.inverse().mapping();
    search.a_letter.assign(search.n, -1);
    search.b_letter.assign(search.n, -1);
    search.suffix_count = w.counts();
    search.committed.assign(search.k, 0);
    if (!search.run(0)) return std::nullopt;
    return SplitWitness{std::move(search.pos_a), std::move(search.pos_b), gamma};
}

std::vector<Permutation> gamma_neighbors(const Word& w,
                                         std::span<const Permutation> candidates) {
    std::vector<Permutation> out;
    for (const auto& gamma : candidates)
        if (is_gamma_shuffle_square(w, gamma)) out.push_back(gamma);
    std::sort(out.begin(), out.end());
    return out;
}

bool two_ones_shuffle_square(const Word& w) {
    if (!w.is_binary() || w.length() % 2 != 0)
        throw std::invalid_argument("expected a binary word of even length");
    std::vector<int> ones;
    for (int i = 0; i < w.length(); ++i)
        if (w.letter(i) == 1) ones.push_back(i);
    if (ones.size() != 2)
        throw std::invalid_argument("expected exactly two 1's");
    int n = w.length() / 2;
    int gap = ones[1] - ones[0] - 1;
    if (gap == 0) return ones[0] % 2 == 0;
    return gap >= 1 && gap <= n - 1;
}

} // namespace shufsq
