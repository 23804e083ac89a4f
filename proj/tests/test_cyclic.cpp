#include <doctest.h>

#include <cstdio>
#include <random>

#include "oracles.hpp"
#include "shufsq/cyclic.hpp"
#include "shufsq/symmetry.hpp"

using namespace shufsq;

namespace {

Word random_even_binary(std::mt19937& rng, int max_half) {
    for (;;) {
        int n = 1 + rng() % max_half;
        std::vector<int> letters(2 * n);
        for (int& l : letters) l = rng() % 2;
        Word w(std::span<const int>(letters), 2);
        if (is_even_word(w)) return w;
    }
}

void check_cyclic_witness(const Word& w) {
    SplitWitness witness = cyclic_decompose(w);
    CHECK(witness.gamma.is_rotation());
    CHECK(witness_is_valid(w, witness));
}

} // namespace

TEST_CASE("fair_split_binary examples") {
    FairSplit split = fair_split_binary(Word::parse("0011"));
    CHECK(split.x.to_string() == "0");
    CHECK(split.v.to_string() == "01");
    CHECK(split.y.to_string() == "1");
    CHECK(split.window_start == 1);

    split = fair_split_binary(Word::parse("0101"));
    CHECK(split.window_start == 0);
    CHECK(split.v.to_string() == "01");

    split = fair_split_binary(Word::parse("0110"));
    CHECK(split.window_start == 0);
    CHECK(split.v.to_string() == "01");
    CHECK(split.y.to_string() == "10");

    CHECK_THROWS_AS(fair_split_binary(Word::parse("01")), std::invalid_argument);
    CHECK_THROWS_AS(fair_split_binary(Word::parse("012")), std::invalid_argument);
}

TEST_CASE("fair_split_binary always finds a balanced window") {
    for (int len = 2; len <= 18; len += 2)
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            if (std::popcount(bits) % 2 != 0) continue;
            Word w = Word::from_bits(bits, len);
            FairSplit split = fair_split_binary(w);
            auto half_counts = split.v.counts();
            auto full_counts = w.counts();
            for (std::size_t c = 0; c < half_counts.size(); ++c)
                CHECK(2 * half_counts[c] == full_counts[c]);
            CHECK(split.x.appended(split.v).appended(split.y) == w);
        }

    std::mt19937 rng(5);
    for (int trial = 0; trial < 1000000; ++trial) {
        Word w = random_even_binary(rng, 64);
        FairSplit split = fair_split_binary(w);
        auto half = split.v.counts();
        auto full = w.counts();
        CHECK(2 * half[0] == full[0]);
    }
}

TEST_CASE("cyclic_decompose examples") {
    SplitWitness identity_case = cyclic_decompose(Word::parse("0011"));
    CHECK(identity_case.gamma.is_identity());
    Word w = Word::parse("0011");
    CHECK(w.subword(identity_case.first_positions).to_string() == "01");
    CHECK(w.subword(identity_case.second_positions).to_string() == "01");

    SplitWitness rotated = cyclic_decompose(Word::parse("0110"));
    Word v = Word::parse("0110");
    CHECK(v.subword(rotated.first_positions).to_string() == "10");
    CHECK(v.subword(rotated.second_positions).to_string() == "01");
    CHECK(rotated.gamma == Permutation::rotation(2, 1));
    CHECK(witness_is_valid(v, rotated));

    SplitWitness empty = cyclic_decompose(Word::parse(""));
    CHECK(empty.first_positions.empty());
    CHECK(empty.gamma.degree() == 0);

    CHECK_THROWS_AS(cyclic_decompose(Word::parse("01")), std::invalid_argument);
}

TEST_CASE("cyclic_decompose is valid on every even binary word up to 14") {
    for (int len = 2; len <= 14; len += 2)
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            if (std::popcount(bits) % 2 != 0) continue;
            check_cyclic_witness(Word::from_bits(bits, len));
        }
}

TEST_CASE("the decider accepts the constructed rotation") {
    for (int len = 2; len <= 12; len += 2)
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            if (std::popcount(bits) % 2 != 0) continue;
            Word w = Word::from_bits(bits, len);
            SplitWitness witness = cyclic_decompose(w);
            CHECK(is_gamma_shuffle_square(w, witness.gamma));
        }
}

TEST_CASE("s statistic") {
    CHECK(s_of(Word::parse("0011")) == 2);
    CHECK(s_of(Word::parse("0101")) == 4);
    CHECK(s_of(Word::parse("")) == 0);

    // s(W) = length for squares
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + rng() % 5;
        std::vector<int> letters(n);
        for (int& l : letters) l = rng() % 2;
        Word half(std::span<const int>(letters), 2);
        Word square = half.appended(half);
        CHECK(s_of(square) == square.length());
    }

    // orbit invariance, exhaustively to length 14
    for (int len = 2; len <= 14; len += 2)
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            Word w = Word::from_bits(bits, len);
            int s = s_of(w);
            CHECK(s_of(w.rotated_left(1)) == s);
            CHECK(s_of(w.reversed()) == s);
            CHECK(s_of(w.complemented()) == s);
        }
}

TEST_CASE("is_anti_square") {
    CHECK(is_anti_square(Word::parse("000001001111000011101111")));
    CHECK_FALSE(is_anti_square(Word::parse("0011")));
    CHECK_FALSE(is_anti_square(Word::parse("0110")));
    CHECK_FALSE(is_anti_square(Word::parse("010"))); // not even
}

TEST_CASE("shift_to_shuffle_square") {
    ShiftResult r = shift_to_shuffle_square(Word::parse("10010110"));
    CHECK_FALSE(r.used_fallback);
    Word shifted = Word::parse("10010110").rotated_left(r.shift);
    CHECK(is_shuffle_square(shifted));
    // moving the first two letters to the end also works
    CHECK(is_shuffle_square(Word::parse("10010110").rotated_left(2)));
    CHECK(Word::parse("10010110").rotated_left(2) == Word::parse("01011010"));

    CHECK(shift_to_shuffle_square(Word::parse("0011")).shift == 0);
    CHECK(shift_to_shuffle_square(Word::parse("")).shift == 0);

    CHECK_THROWS_AS(shift_to_shuffle_square(Word::parse("0111101101")),
                    std::invalid_argument); // six 1's
    CHECK_THROWS_AS(shift_to_shuffle_square(Word::parse("0100")),
                    std::invalid_argument); // odd 1-count
}

TEST_CASE("shift_to_shuffle_square covers every word with at most four 1's") {
    for (int len = 2; len <= 18; len += 2) {
        std::vector<std::uint32_t> words;
        words.push_back(0);
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j) {
                std::uint32_t two =
                    (1u << (len - 1 - i)) | (1u << (len - 1 - j));
                words.push_back(two);
                for (int a = j + 1; a < len; ++a)
                    for (int b = a + 1; b < len; ++b)
                        words.push_back(two | (1u << (len - 1 - a)) |
                                        (1u << (len - 1 - b)));
            }
        for (std::uint32_t bits : words) {
            Word w = Word::from_bits(bits, len);
            ShiftResult result = shift_to_shuffle_square(w);
            CHECK_FALSE(result.used_fallback);
            CHECK(is_shuffle_square(w.rotated_left(result.shift)));
        }
    }
}

TEST_CASE("necklace enumeration") {
    std::vector<std::uint32_t> necklaces;
    std::optional<std::uint32_t> cursor;
    while ((cursor = next_necklace(cursor, 4)))
        necklaces.push_back(*cursor);
    CHECK(necklaces ==
          std::vector<std::uint32_t>{0b0000, 0b0001, 0b0011, 0b0101, 0b0111,
                                     0b1111});

    // counts for length 6: 14 binary necklaces
    int count = 0;
    cursor.reset();
    while ((cursor = next_necklace(cursor, 6))) ++count;
    CHECK(count == 14);
}

TEST_CASE("anti-square scan small lengths") {
    AntiSquareReport report = anti_square_scan(2);
    CHECK(report.s_min == 2);
    CHECK(report.class_count() == 1);
    CHECK(report.representatives[0] == Word::parse("00"));

    report = anti_square_scan(4);
    CHECK(report.s_min == 2);
    CHECK(report.class_count() == 1);
    CHECK(report.representatives[0] == Word::parse("0011"));

    report = anti_square_scan(6);
    CHECK(report.s_min == 3);
    CHECK(report.class_count() == 1);

    report = anti_square_scan(14);
    CHECK(report.s_min == 3);
    CHECK(report.class_count() == 2);

    CHECK(anti_square_report_to_text(anti_square_scan(4)) ==
          "length=4 s_min=2 classes=1\n0011\n");
}

TEST_CASE("anti-square scan representatives are orbit minima with minimal s") {
    AntiSquareReport report = anti_square_scan(10);
    GroupSpec all;
    for (const Word& w : report.representatives) {
        CHECK(is_even_word(w));
        CHECK(s_of(w) == report.s_min);
        CHECK(orbit_representative(w, all).representative == w);
    }
    // cross-check s_min by brute force over all even words
    int brute = 99;
    for (std::uint32_t bits = 0; bits < (1u << 10); ++bits) {
        if (std::popcount(bits) % 2 != 0) continue;
        brute = std::min(brute, s_of(Word::from_bits(bits, 10)));
    }
    CHECK(brute == report.s_min);
}

TEST_CASE("scan checkpointing resumes to the identical report") {
    std::string path = "scan_checkpoint_test.bin";
    std::remove(path.c_str());

    AntiSquareReport full = anti_square_scan(12);

    ScanOptions interrupted;
    interrupted.checkpoint_path = path;
    interrupted.checkpoint_every = 3;
    interrupted.stop_after = 7;
    AntiSquareReport partial = anti_square_scan(12, interrupted);
    CHECK_FALSE(partial.complete);
    CHECK(partial.scanned == 7);

    ScanOptions resumed;
    resumed.checkpoint_path = path;
    resumed.checkpoint_every = 1000;
    AntiSquareReport finished = anti_square_scan(12, resumed);
    CHECK(finished.complete);
    CHECK(finished.s_min == full.s_min);
    CHECK(finished.scanned == full.scanned);
    REQUIRE(finished.representatives.size() == full.representatives.size());
    for (std::size_t i = 0; i < full.representatives.size(); ++i)
        CHECK(finished.representatives[i] == full.representatives[i]);
    CHECK(anti_square_report_to_text(finished) == anti_square_report_to_text(full));
    std::remove(path.c_str());
}

TEST_CASE("scan reports do not depend on the worker count") {
    AntiSquareReport one, four;
    {
        ScanOptions options;
        options.workers = 1;
        one = anti_square_scan(14, options);
    }
    {
        ScanOptions options;
        options.workers = 4;
        four = anti_square_scan(14, options);
    }
    CHECK(anti_square_report_to_text(one) == anti_square_report_to_text(four));
}

TEST_CASE("corrupt checkpoints are rejected") {
    std::string path = "scan_checkpoint_corrupt.bin";
    {
        FILE* f = std::fopen(path.c_str(), "wb");
        std::fputs("not a checkpoint", f);
        std::fclose(f);
    }
    ScanOptions options;
    options.checkpoint_path = path;
    CHECK_THROWS_AS(anti_square_scan(12, options), CheckpointError);
    std::remove(path.c_str());

    // a checkpoint for another length is refused as well
    ScanOptions make;
    make.checkpoint_path = path;
    make.stop_after = 2;
    anti_square_scan(10, make);
    ScanOptions wrong;
    wrong.checkpoint_path = path;
    CHECK_THROWS_AS(anti_square_scan(12, wrong), CheckpointError);
    std::remove(path.c_str());
}
