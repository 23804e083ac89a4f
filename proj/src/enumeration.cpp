#include "shufsq/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "parallel.hpp"
#include "shufsq/symmetry.hpp"

namespace shufsq {

CountTable::CountTable(int max_length, std::vector<std::vector<std::uint64_t>> rows)
    : max_length_(max_length), rows_(std::move(rows)) {
    totals_.reserve(rows_.size());
    for (const auto& row : rows_) {
        std::uint64_t sum = 0;
        for (std::uint64_t v : row) sum += v;
        totals_.push_back(sum);
    }
}

std::uint64_t CountTable::entry(int two_n, int two_k) const {
    if (two_n < 2 || two_n > max_length_ || two_n % 2 != 0)
        throw std::invalid_argument("count table: bad length");
    if (two_k < 0 || two_k > two_n)
        throw std::invalid_argument("count table: bad 1-count");
    if (two_k % 2 != 0) return 0;
    return rows_[two_n / 2 - 1][two_k / 2];
}

std::uint64_t CountTable::total(int two_n) const {
    if (two_n < 2 || two_n > max_length_ || two_n % 2 != 0)
        throw std::invalid_argument("count table: bad length");
    return totals_[two_n / 2 - 1];
}

namespace {

std::vector<std::uint64_t> count_squares_by_ones(int length, int workers) {
    int n = length / 2;
    int nworkers = detail::resolve_workers(workers);
    std::vector<std::vector<std::uint64_t>> partial(
        nworkers, std::vector<std::uint64_t>(n + 1, 0));
    std::uint64_t total = 1ull << length;
    detail::parallel_chunks(0, total, nworkers,
                            [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
                                for (std::uint64_t v = lo; v < hi; ++v) {
                                    int ones = std::popcount(v);
                                    if (ones % 2 != 0) continue;
                                    if (shuffle_square_bits(
                                            static_cast<std::uint32_t>(v), length))
                                        ++partial[chunk][ones / 2];
                                }
                            });
    std::vector<std::uint64_t> row(n + 1, 0);
    for (const auto& p : partial)
        for (int k = 0; k <= n; ++k) row[k] += p[k];
    return row;
}

} // namespace

CountTable count_table(int max_length, int workers) {
    if (max_length < 2 || max_length % 2 != 0 || max_length > 32)
        throw std::invalid_argument("count_table: even max_length in 2..32 required");
    std::vector<std::vector<std::uint64_t>> rows;
    for (int length = 2; length <= max_length; length += 2)
        rows.push_back(count_squares_by_ones(length, workers));
    CountTable table(max_length, std::move(rows));

    for (int two_n = 2; two_n <= max_length; two_n += 2)
        for (int two_k = 0; two_k <= two_n; two_k += 2)
            if (table.entry(two_n, two_k) != table.entry(two_n, two_n - two_k))
                throw std::logic_error("count table symmetry violated");
    return table;
}

std::uint64_t two_ones_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("two_ones_closed_form: n >= 1 required");
    std::uint64_t un = static_cast<std::uint64_t>(n);
    return 3 * un * (un - 1) / 2 + 1;
}

std::uint64_t total_shuffle_squares(int length, int workers) {
    if (length < 2 || length % 2 != 0 || length > 32)
        throw std::invalid_argument("total_shuffle_squares: even length in 2..32 required");
    int nworkers = detail::resolve_workers(workers);
    std::vector<std::uint64_t> partial(nworkers, 0);
    detail::parallel_chunks(0, 1ull << length, nworkers,
                            [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
                                for (std::uint64_t v = lo; v < hi; ++v)
                                    partial[chunk] += shuffle_square_bits(
                                        static_cast<std::uint32_t>(v), length);
                            });
    std::uint64_t total = 0;
    for (std::uint64_t p : partial) total += p;
    return total;
}

bool has_xyyx_subword(const Word& w) {
    int k = w.alphabet_size();
    int len = w.length();
    // prefix states per letter pair, advanced one position at a time:
    // X seen, X..Y seen, X..Y..Y seen; the final X closes the pattern
    std::vector<bool> seen(k, false);
    std::vector<std::vector<bool>> open_xy(k, std::vector<bool>(k, false));
    std::vector<std::vector<bool>> open_xyy(k, std::vector<bool>(k, false));
    for (int i = 0; i < len; ++i) {
        int c = w.letter(i);
        for (int y = 0; y < k; ++y)
            if (open_xyy[c][y]) return true;
        for (int x = 0; x < k; ++x)
            if (open_xy[x][c]) open_xyy[x][c] = true;
        for (int x = 0; x < k; ++x)
            if (seen[x]) open_xy[x][c] = true;
        seen[c] = true;
    }
    return false;
}

std::uint64_t canonical_shuffle_square_count(int k) {
    std::uint64_t count = 0;
    for (const Word& w : enumerate_canonical_words(k))
        count += is_shuffle_square(w).has_value();
    return count;
}

std::optional<SplitWitness> canonical_greedy_witness(const Word& w) {
    if (!is_canonical_word(w))
        throw std::invalid_argument("canonical word required");
    int k = w.alphabet_size();
    std::vector<int> first, second;
    std::vector<bool> seen(k, false);
    int last_second = -1;
    bool ordered = true;
    for (int i = 0; i < w.length(); ++i) {
        int c = w.letter(i);
        if (!seen[c]) {
            seen[c] = true;
            first.push_back(i);
        } else {
            if (c <= last_second) ordered = false;
            last_second = c;
            second.push_back(i);
        }
    }
    if (!ordered) return std::nullopt;
    return SplitWitness{std::move(first), std::move(second),
                        Permutation::identity(k)};
}

std::uint64_t catalan(int k) {
    // C_{n+1} = C_n * 2(2n+1)/(n+2); every division is exact
    std::uint64_t c = 1;
    for (int n = 0; n < k; ++n)
        c = c * 2 * (2 * static_cast<std::uint64_t>(n) + 1) / (n + 2);
    return c;
}

std::string count_table_to_csv(const CountTable& table) {
    std::string out = "2k\\2n";
    for (int two_n = 2; two_n <= table.max_length(); two_n += 2)
        out += "," + std::to_string(two_n);
    out.push_back('\n');
    for (int two_k = 0; two_k <= table.max_length(); two_k += 2) {
        out += std::to_string(two_k);
        for (int two_n = 2; two_n <= table.max_length(); two_n += 2)
            out += "," + (two_k <= two_n
                              ? std::to_string(table.entry(two_n, two_k))
                              : std::string("0"));
        out.push_back('\n');
    }
    out += "sum";
    for (int two_n = 2; two_n <= table.max_length(); two_n += 2)
        out += "," + std::to_string(table.total(two_n));
    out.push_back('\n');
    return out;
}

} // namespace shufsq
