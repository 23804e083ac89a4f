#include "shufsq/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shufsq {

namespace {

constexpr int kMaxOrbitAlphabet = 8; // 8! relabelings is the practical ceiling

std::vector<std::vector<int>> letter_maps(int k, bool all_relabelings) {
    std::vector<std::vector<int>> maps;
    std::vector<int> m(k);
    std::iota(m.begin(), m.end(), 0);
    if (!all_relabelings) return {m};
    do {
        maps.push_back(m);
    } while (std::next_permutation(m.begin(), m.end()));
    return maps;
}

} // namespace

std::vector<Word> orbit_members(const Word& w, GroupSpec spec) {
    if (spec.alphabet_permutation && w.alphabet_size() > kMaxOrbitAlphabet)
        throw std::invalid_argument("alphabet too large for orbit enumeration");
    std::vector<Word> out;
    auto maps = letter_maps(w.alphabet_size(), spec.alphabet_permutation);
    int shifts = spec.cyclic_shifts ? std::max(w.length(), 1) : 1;
    for (int dir = 0; dir < (spec.reversal ? 2 : 1); ++dir) {
        Word base = dir == 0 ? w : w.reversed();
        for (int j = 0; j < shifts; ++j) {
            Word rotated = base.rotated_left(j);
            for (const auto& m : maps) out.push_back(rotated.mapped_letters(m));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SymmetryClass orbit_representative(const Word& w, GroupSpec spec) {
    auto members = orbit_members(w, spec);
    return SymmetryClass{members.front(), members.size(), spec};
}

bool is_canonical_word(const Word& w) {
    auto counts = w.counts();
    for (int c : counts)
        if (c != 2) return false;
    if (w.length() != 2 * w.alphabet_size()) return false;
    int next_new = 0;
    std::vector<bool> seen(w.alphabet_size(), false);
    for (int i = 0; i < w.length(); ++i) {
        int v = w.letter(i);
        if (!seen[v]) {
            if (v != next_new) return false;
            seen[v] = true;
            ++next_new;
        }
    }
    return true;
}

std::vector<Word> enumerate_canonical_words(int k) {
    if (k < 1 || 2 * k > 32)
        throw std::invalid_argument("canonical enumeration needs 1 <= k <= 16");
    std::vector<Word> out;
    std::vector<int> letters(2 * k);
    std::vector<int> remaining(k, 2);

    // Positions are filled left to right; a letter may start a new value
    // only if it is the smallest unused one, which yields exactly the
    // canonical words in lexicographic order.
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == 2 * k) {
            out.push_back(word_with_style(
                Word(std::span<const int>(letters), k), true));
            return;
        }
        int limit = std::min(used + 1, k);
        for (int v = 0; v < limit; ++v) {
            if (remaining[v] == 0) continue;
            --remaining[v];
            letters[pos] = v;
            self(self, pos + 1, std::max(used, v + 1));
            ++remaining[v];
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::uint64_t canonical_word_count(int k) {
    std::uint64_t result = 1;
    // (2k)!/(k! 2^k) = prod_{i=1..k} (2i-1)
    for (int i = 1; i <= k; ++i) result *= 2 * i - 1;
    return result;
}

} // namespace shufsq
