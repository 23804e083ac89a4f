#include <doctest.h>

#include "oracles.hpp"
#include "shufsq/enumeration.hpp"
#include "shufsq/symmetry.hpp"

using namespace shufsq;

TEST_CASE("count table small values") {
    CountTable table = count_table(8);
    CHECK(table.entry(2, 2) == 1);  // {11}
    CHECK(table.entry(4, 2) == 4);  // {0011, 0101, 1010, 1100}
    CHECK(table.entry(6, 2) == 10);
    CHECK(table.entry(8, 2) == 19);
    CHECK(table.entry(8, 4) == 42);
    CHECK(table.entry(8, 0) == 1);
    CHECK(table.entry(8, 8) == 1);
    CHECK(table.entry(8, 3) == 0); // odd 1-counts never occur
    CHECK(table.total(2) == 2);
    CHECK(table.total(4) == 6);
    CHECK(table.total(6) == 22);
    CHECK(table.total(8) == 82);
    CHECK_THROWS_AS(table.entry(10, 2), std::invalid_argument);
}

TEST_CASE("table symmetry and closed form") {
    CountTable table = count_table(12);
    for (int two_n = 2; two_n <= 12; two_n += 2) {
        for (int two_k = 0; two_k <= two_n; two_k += 2)
            CHECK(table.entry(two_n, two_k) == table.entry(two_n, two_n - two_k));
        CHECK(table.entry(two_n, 2) == two_ones_closed_form(two_n / 2));
    }
    CHECK(table.total(10) == total_shuffle_squares(10));
    CHECK(table.total(12) == total_shuffle_squares(12));
}

TEST_CASE("two ones closed form") {
    CHECK(two_ones_closed_form(1) == 1);
    CHECK(two_ones_closed_form(2) == 4);
    CHECK(two_ones_closed_form(4) == 19);
    CHECK(two_ones_closed_form(10) == 136);
}

TEST_CASE("csv serialization") {
    CHECK(count_table_to_csv(count_table(4)) ==
          "2k\\2n,2,4\n"
          "0,1,1\n"
          "2,1,4\n"
          "4,0,1\n"
          "sum,2,6\n");
}

TEST_CASE("xyyx subsequence detection") {
    CHECK(has_xyyx_subword(Word::parse("ABBA")));
    CHECK_FALSE(has_xyyx_subword(Word::parse("AABB")));
    CHECK(has_xyyx_subword(Word::parse("ABCBAC")));

    for (int k = 1; k <= 4; ++k)
        for (const Word& w : enumerate_canonical_words(k))
            CHECK(has_xyyx_subword(w) == oracles::xyyx_by_quartic_scan(w));
}

TEST_CASE("canonical shuffle squares are counted by Catalan numbers") {
    CHECK(catalan(1) == 1);
    CHECK(catalan(2) == 2);
    CHECK(catalan(3) == 5);
    CHECK(catalan(4) == 14);
    CHECK(catalan(5) == 42);

    for (int k = 1; k <= 4; ++k)
        CHECK(canonical_shuffle_square_count(k) == catalan(k));

    // characterization: shuffle square iff no XYYX subsequence
    for (int k = 1; k <= 4; ++k)
        for (const Word& w : enumerate_canonical_words(k))
            CHECK(is_shuffle_square(w).has_value() == !has_xyyx_subword(w));
}

TEST_CASE("greedy first-occurrence witness") {
    for (int k = 1; k <= 4; ++k)
        for (const Word& w : enumerate_canonical_words(k)) {
            auto greedy = canonical_greedy_witness(w);
            CHECK(greedy.has_value() == is_shuffle_square(w).has_value());
            if (greedy) {
                CHECK(witness_is_valid(w, *greedy));
                // the coloring pattern is a Dyck word: prefixes never have
                // more second-copy letters than first-copy letters
                std::vector<int> color(w.length(), 1);
                for (int p : greedy->first_positions) color[p] = 0;
                int open = 0;
                for (int c : color) {
                    open += c == 0 ? 1 : -1;
                    CHECK(open >= 0);
                }
                CHECK(open == 0);
            }
        }
    CHECK_THROWS_AS(canonical_greedy_witness(Word::parse("BBAA")),
                    std::invalid_argument);
}
