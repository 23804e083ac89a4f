#include "shufsq/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "parallel.hpp"

namespace shufsq {

namespace {

std::uint32_t length_mask(int length) {
    return length == 32 ? 0xffffffffu : ((1u << length) - 1u);
}

void require_even_binary(const Word& w, const char* who) {
    if (!w.is_binary())
        throw std::invalid_argument(std::string(who) + ": binary word required");
    if (!is_even_word(w))
        throw std::invalid_argument(std::string(who) + ": even word required");
}

std::uint32_t min_rotation(std::uint32_t bits, int length) {
    std::uint32_t best = bits;
    for (int j = 1; j < length; ++j)
        best = std::min(best, rotate_bits_left(bits, length, j));
    return best;
}

// s(W) computed on the distinct shifts and expanded by the period. Stops
// as soon as the count exceeds `cap` (the returned value is then only a
// lower bound, still > cap).
int s_bits_capped(std::uint32_t bits, int length, int cap) {
    int p = period_bits(bits, length);
    int mult = length / p;
    int count = 0;
    for (int j = 0; j < p; ++j) {
        if (shuffle_square_bits(rotate_bits_left(bits, length, j), length)) {
            ++count;
            if (count * mult > cap) return count * mult;
        }
    }
    return count * mult;
}

// ---- shift-to-shuffle-square case analysis -------------------------------
//
// Works on the cyclic run structure of a word with at most four 1's. Every
// case rotates the word so that it starts with a maximal run of 1's and
// then either exhibits a factorization into shuffle squares directly or
// rotates by one or two more letters. Words with four isolated 1's are
// reduced by treating 10^a (a = least gap) as a single letter and
// recursing; the reduced word starts with a doubled letter, so the
// recursion stops after one step.

struct Run {
    int start = 0;
    int length = 0;
};

int letter_at(std::uint32_t bits, int length, int i) {
    return (bits >> (length - 1 - i)) & 1u;
}

std::vector<Run> cyclic_one_runs(std::uint32_t bits, int length) {
    std::vector<Run> runs;
    for (int i = 0; i < length; ++i) {
        if (letter_at(bits, length, i) != 1) continue;
        if (letter_at(bits, length, (i + length - 1) % length) == 1) continue;
        Run run{i, 1};
        while (letter_at(bits, length, (i + run.length) % length) == 1) ++run.length;
        runs.push_back(run);
    }
    return runs;
}

int proposed_shift(std::uint32_t bits, int length) {
    int ones = std::popcount(bits);
    if (ones == 0 || ones == length) return 0;

    auto runs = cyclic_one_runs(bits, length);
    // start from a maximal run; ties break to the smallest start
    std::size_t best = 0;
    for (std::size_t i = 1; i < runs.size(); ++i)
        if (runs[i].length > runs[best].length) best = i;
    std::rotate(runs.begin(), runs.begin() + best, runs.end());
    int rot0 = runs[0].start;

    std::vector<int> gaps(runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const Run& cur = runs[i];
        const Run& next = runs[(i + 1) % runs.size()];
        gaps[i] = ((next.start - (cur.start + cur.length)) % length + length) % length;
    }

    if (ones == 2) {
        if (runs.size() == 1) return rot0; // 110^{2r}
        int a = gaps[0], b = gaps[1];
        return (a <= b ? rot0 : rot0 + 1) % length;
    }

    // four 1's
    switch (runs.size()) {
        case 1: // 11110^{2r}
            return rot0;
        case 2:
            if (runs[0].length == 3) { // 1110^a10^b
                int a = gaps[0], b = gaps[1];
                return (a <= b ? rot0 : rot0 + 1) % length;
            } else { // 110^a110^c
                int a = gaps[0], c = gaps[1];
                return (a <= c ? rot0 : rot0 + 2 + a) % length;
            }
        case 3: { // 110^a10^b10^c
            int a = gaps[0], b = gaps[1], c = gaps[2];
            int r = (a + b + c) / 2;
            if (a <= r && r <= a + b) return (rot0 + 1) % length;
            if (r < a) return rot0;
            return (rot0 + 2) % length;
        }
        default: { // 10^a10^b10^c10^d, all gaps positive
            int m = 0;
            for (int i = 1; i < 4; ++i)
                if (gaps[i] < gaps[m]) m = i;
            int a = gaps[m];
            int reduced_len = 4;
            for (int i = 1; i < 4; ++i) reduced_len += gaps[(m + i) % 4] - a;
            std::uint32_t reduced = 0;
            std::vector<int> expanded(reduced_len); // real length per letter
            int pos = 0;
            for (int i = 0; i < 4; ++i) {
                reduced = (reduced << 1) | 1u;
                expanded[pos++] = 1 + a;
                int zeros = (i == 0 ? 0 : gaps[(m + i) % 4] - a);
                reduced <<= zeros;
                for (int z = 0; z < zeros; ++z) expanded[pos++] = 1;
            }
            int shift_u = proposed_shift(reduced, reduced_len) % reduced_len;
            int real = 0;
            for (int i = 0; i < shift_u; ++i) real += expanded[i];
            return (runs[m].start + real) % length;
        }
    }
}

// ---- checkpoint file ------------------------------------------------------

constexpr char kCheckpointMagic[8] = {'S', 'Q', 'S', 'C', 'A', 'N', '0', '1'};

struct Checkpoint {
    int length = 0;
    std::uint64_t processed = 0;
    std::uint32_t last_representative = 0;
    int s_min = 0;
    std::vector<std::uint32_t> representatives;
};

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::fprintf(stderr, "warning: cannot write checkpoint %s\n", path.c_str());
        return;
    }
    auto put = [&out](const void* p, std::size_t n) {
        out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    };
    put(kCheckpointMagic, sizeof kCheckpointMagic);
    std::uint32_t len = static_cast<std::uint32_t>(cp.length);
    put(&len, sizeof len);
    put(&cp.processed, sizeof cp.processed);
    put(&cp.last_representative, sizeof cp.last_representative);
    std::int32_t smin = cp.s_min;
    put(&smin, sizeof smin);
    std::uint64_t count = cp.representatives.size();
    put(&count, sizeof count);
    for (std::uint32_t r : cp.representatives) put(&r, sizeof r);
    if (!out) std::fprintf(stderr, "warning: checkpoint write failed: %s\n", path.c_str());
}

Checkpoint read_checkpoint(const std::string& path, int expected_length) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CheckpointError("cannot open checkpoint: " + path);
    auto get = [&in, &path](void* p, std::size_t n) {
        in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        if (!in) throw CheckpointError("corrupt checkpoint (truncated): " + path);
    };
    char magic[8];
    get(magic, sizeof magic);
    if (std::memcmp(magic, kCheckpointMagic, sizeof magic) != 0)
        throw CheckpointError("corrupt checkpoint (bad magic): " + path);
    Checkpoint cp;
    std::uint32_t len = 0;
    get(&len, sizeof len);
    cp.length = static_cast<int>(len);
    if (cp.length != expected_length)
        throw CheckpointError("checkpoint is for a different length: " + path);
    get(&cp.processed, sizeof cp.processed);
    get(&cp.last_representative, sizeof cp.last_representative);
    std::int32_t smin = 0;
    get(&smin, sizeof smin);
    cp.s_min = smin;
    std::uint64_t count = 0;
    get(&count, sizeof count);
    if (count > (1ull << 32)) throw CheckpointError("corrupt checkpoint: " + path);
    cp.representatives.resize(count);
    for (auto& r : cp.representatives) get(&r, sizeof r);
    return cp;
}

} // namespace

std::uint32_t rotate_bits_left(std::uint32_t bits, int length, int j) {
    j = ((j % length) + length) % length;
    if (j == 0) return bits;
    std::uint32_t mask = length_mask(length);
    return ((bits << j) | (bits >> (length - j))) & mask;
}

std::uint32_t reverse_bits(std::uint32_t bits, int length) {
    std::uint32_t out = 0;
    for (int i = 0; i < length; ++i) {
        out = (out << 1) | (bits & 1u);
        bits >>= 1;
    }
    return out;
}

int period_bits(std::uint32_t bits, int length) {
    for (int p = 1; p < length; ++p) {
        if (length % p != 0) continue;
        if (rotate_bits_left(bits, length, p) == bits) return p;
    }
    return length;
}

std::optional<std::uint32_t> next_necklace(std::optional<std::uint32_t> current,
                                           int length) {
    if (!current) return 0u;
    std::uint8_t a[33];
    for (int i = 1; i <= length; ++i)
        a[i] = (*current >> (length - i)) & 1u;
    while (true) {
        int i = length;
        while (i >= 1 && a[i] == 1) --i;
        if (i == 0) return std::nullopt;
        a[i] = 1;
        for (int j = i + 1; j <= length; ++j) a[j] = a[j - i];
        if (length % i == 0) {
            std::uint32_t bits = 0;
            for (int j = 1; j <= length; ++j) bits = (bits << 1) | a[j];
            return bits;
        }
    }
}

bool necklace_is_orbit_representative(std::uint32_t bits, int length) {
    std::uint32_t mask = length_mask(length);
    std::uint32_t rev = reverse_bits(bits, length);
    for (std::uint32_t variant : {rev, mask ^ bits, mask ^ rev})
        if (min_rotation(variant, length) < bits) return false;
    return true;
}

FairSplit fair_split_binary(const Word& w) {
    require_even_binary(w, "fair_split_binary");
    int len = w.length();
    if (len < 2) throw std::invalid_argument("fair_split_binary: length >= 2 required");
    int n = len / 2;
    int zeros = 0;
    for (int i = 0; i < len; ++i) zeros += w.letter(i) == 0;
    int target = zeros / 2;

    int window_zeros = 0;
    for (int i = 0; i < n; ++i) window_zeros += w.letter(i) == 0;
    int start = 0;
    while (window_zeros != target) {
        window_zeros += (w.letter(start + n) == 0) - (w.letter(start) == 0);
        ++start;
        if (start > n) throw std::logic_error("balanced window must exist");
    }
    std::vector<int> head, mid, tail;
    for (int i = 0; i < start; ++i) head.push_back(i);
    for (int i = start; i < start + n; ++i) mid.push_back(i);
    for (int i = start + n; i < len; ++i) tail.push_back(i);
    auto piece = [&w](const std::vector<int>& idx) {
        return idx.empty() ? Word({}, w.alphabet_size()) : w.subword(idx);
    };
    return FairSplit{piece(head), piece(mid), piece(tail), start};
}

SplitWitness cyclic_decompose(const Word& w) {
    require_even_binary(w, "cyclic_decompose");
    if (w.empty()) return SplitWitness{{}, {}, Permutation()};

    FairSplit split = fair_split_binary(w);
    int len = w.length();
    int n = len / 2;
    int start = split.window_start;
    int window_end = start + n;

    // A takes the 0's of x, the 1's of v, the 0's of y; B the rest. Both
    // rotate to 0^r 1^s, so A = gamma(B) for the rotation computed below.
    std::vector<int> first, second;
    int x_zeros = 0, x_ones = 0, v_ones = 0;
    for (int i = 0; i < start; ++i) {
        if (w.letter(i) == 0) {
            first.push_back(i);
            ++x_zeros;
        } else {
            second.push_back(i);
            ++x_ones;
        }
    }
    for (int i = start; i < window_end; ++i) {
        if (w.letter(i) == 1) {
            first.push_back(i);
            ++v_ones;
        } else {
            second.push_back(i);
        }
    }
    for (int i = window_end; i < len; ++i) {
        if (w.letter(i) == 0)
            first.push_back(i);
        else
            second.push_back(i);
    }

    int shift = ((x_ones - x_zeros - v_ones) % n + n) % n;
    return SplitWitness{std::move(first), std::move(second),
                        Permutation::rotation(n, shift)};
}

ShiftResult shift_to_shuffle_square(const Word& w) {
    require_even_binary(w, "shift_to_shuffle_square");
    int len = w.length();
    if (len > 32)
        throw std::invalid_argument("shift_to_shuffle_square: length <= 32 required");
    if (len == 0) return ShiftResult{0, false};
    std::uint32_t bits = w.to_bits();
    int ones = std::popcount(bits);
    if (ones > 4)
        throw std::invalid_argument("shift_to_shuffle_square: at most four 1's required");

    if (shuffle_square_bits(bits, len)) return ShiftResult{0, false};
    int shift = proposed_shift(bits, len) % len;
    if (shuffle_square_bits(rotate_bits_left(bits, len, shift), len))
        return ShiftResult{shift, false};
    for (int j = 0; j < len; ++j)
        if (shuffle_square_bits(rotate_bits_left(bits, len, j), len))
            return ShiftResult{j, true};
    throw std::logic_error("no shift yields a shuffle square");
}

int s_of(const Word& w) {
    int len = w.length();
    if (len == 0) return 0;
    int p = word_period(w);
    int mult = len / p;
    int count = 0;
    if (w.is_binary() && len <= 32) {
        std::uint32_t bits = w.to_bits();
        for (int j = 0; j < p; ++j)
            count += shuffle_square_bits(rotate_bits_left(bits, len, j), len);
    } else {
        for (int j = 0; j < p; ++j)
            count += is_shuffle_square(w.rotated_left(j)).has_value();
    }
    return count * mult;
}

bool is_anti_square(const Word& w) {
    return is_even_word(w) && s_of(w) == 0;
}

AntiSquareReport anti_square_scan(int length, const ScanOptions& options) {
    if (length < 2 || length % 2 != 0 || length > 32)
        throw std::invalid_argument("anti_square_scan: even length in 2..32 required");
    int workers = detail::resolve_workers(options.workers);

    std::uint64_t processed = 0;
    int cur_min = length + 1;
    std::vector<std::uint32_t> minimal;
    std::optional<std::uint32_t> cursor;

    if (options.resume && !options.checkpoint_path.empty()) {
        std::ifstream probe(options.checkpoint_path);
        if (probe.good()) {
            Checkpoint cp = read_checkpoint(options.checkpoint_path, length);
            // replay the enumeration up to the recorded representative
            std::uint64_t seen = 0;
            std::optional<std::uint32_t> c;
            if (cp.processed > 0) {
                while (true) {
                    c = next_necklace(c, length);
                    if (!c)
                        throw CheckpointError("checkpoint beyond enumeration; restart required");
                    if (std::popcount(*c) % 2 == 0 &&
                        necklace_is_orbit_representative(*c, length)) {
                        ++seen;
                        if (*c == cp.last_representative) break;
                        if (*c > cp.last_representative)
                            throw CheckpointError(
                                "checkpoint does not match enumeration; restart required");
                    }
                }
                if (seen != cp.processed)
                    throw CheckpointError(
                        "checkpoint count mismatch; restart required");
            }
            cursor = c;
            processed = cp.processed;
            cur_min = cp.s_min;
            minimal = std::move(cp.representatives);
        }
    }

    bool stopped = false;
    while (true) {
        std::uint64_t block_limit = options.checkpoint_every;
        if (options.stop_after > 0) {
            if (processed >= options.stop_after) {
                stopped = true;
                break;
            }
            block_limit = std::min(block_limit, options.stop_after - processed);
        }

        std::vector<std::uint32_t> batch;
        batch.reserve(std::min<std::uint64_t>(block_limit, 1u << 16));
        while (batch.size() < block_limit) {
            cursor = next_necklace(cursor, length);
            if (!cursor) break;
            if (std::popcount(*cursor) % 2 != 0) continue;
            if (!necklace_is_orbit_representative(*cursor, length)) continue;
            batch.push_back(*cursor);
        }
        if (batch.empty()) break;

        // the cap is fixed for the whole block, so results do not depend
        // on thread scheduling or on where checkpoints cut the stream
        int cap = cur_min;
        std::vector<int> s_values(batch.size());
        detail::parallel_chunks(
            0, batch.size(), workers,
            [&](int, std::uint64_t lo, std::uint64_t hi) {
                for (std::uint64_t i = lo; i < hi; ++i)
                    s_values[i] = s_bits_capped(batch[i], length, cap);
            });

        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (s_values[i] > cap) continue;
            if (s_values[i] < cur_min) {
                cur_min = s_values[i];
                minimal.clear();
            }
            if (s_values[i] == cur_min) minimal.push_back(batch[i]);
        }
        processed += batch.size();

        if (!options.checkpoint_path.empty())
            write_checkpoint(options.checkpoint_path,
                             Checkpoint{length, processed, batch.back(), cur_min,
                                        minimal});
        if (!cursor) break;
    }

    AntiSquareReport report;
    report.length = length;
    report.s_min = cur_min;
    report.complete = !stopped;
    report.scanned = processed;
    report.representatives.reserve(minimal.size());
    for (std::uint32_t bits : minimal)
        report.representatives.push_back(Word::from_bits(bits, length));
    return report;
}

std::string anti_square_report_to_text(const AntiSquareReport& report) {
    std::string out = "length=" + std::to_string(report.length) +
                      " s_min=" + std::to_string(report.s_min) +
                      " classes=" + std::to_string(report.class_count());
    if (!report.complete)
        out += " partial=1 scanned=" + std::to_string(report.scanned);
    out.push_back('\n');
    for (const Word& w : report.representatives) {
        out += w.to_string();
        out.push_back('\n');
    }
    return out;
}

} // namespace shufsq
