// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "autoseq/numeration.hpp"

using namespace autoseq;

TEST_CASE("digits are least significant first with nonzero leading digit") {
    CHECK(digits_lsb(static_cast<std::int64_t>(13), 2) == std::vector<Digit>{1, 0, 1, 1});
    CHECK(digits_lsb(static_cast<std::int64_t>(7), 7) == std::vector<Digit>{0, 1});
    CHECK(digits_lsb(static_cast<std::int64_t>(1), 5) == std::vector<Digit>{1});
    for (int p = 2; p <= 9; ++p)
        for (std::int64_t n = 1; n <= 300; ++n) {
            auto d = digits_lsb(n, p);
            CHECK(d.back() != 0);
            CHECK(value_of_digits(d, p) == BigInt(n));
        }
}

TEST_CASE("index zero and negatives are hard errors") {
    CHECK_THROWS_AS(digits_lsb(static_cast<std::int64_t>(0), 2), Error);
    CHECK_THROWS_AS(digits_lsb(static_cast<std::int64_t>(-3), 2), Error);
    CHECK_THROWS_AS(digits_lsb(BigInt(0), 2), Error);
    CHECK_THROWS_AS(check_base(1), Error);
    CHECK_THROWS_AS(digits_lsb(static_cast<std::int64_t>(5), 1), Error);
}

TEST_CASE("big integer digits agree with the native ones") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 1000000);
        int p = 2 + static_cast<int>(rng() % 8);
        CHECK(digits_lsb(n, p) == digits_lsb(BigInt(n), p));
    }
}

TEST_CASE("numeration stats count digit occurrences") {
    NumerationStats s = numeration_stats(12, 2); // 0011 least significant first
    CHECK(s.length == 4);
    CHECK(s.digit_count == std::vector<std::int64_t>{2, 2});
    NumerationStats t = numeration_stats(342, 7); // 342 = 6*49 + 6*7 + 6
    CHECK(t.length == 3);
    CHECK(t.digit_count[6] == 3);
}

TEST_CASE("codes print as affine forms and expose padded words") {
    AffineCode c(2, BigInt(3), 2);
    CHECK(c.str() == "[4X+3]");
    CHECK(c.word() == "11");
    CHECK(c.path() == std::vector<Digit>{1, 1});
    CHECK_FALSE(c.is_identity());

    AffineCode pad(3, BigInt(2), 2);
    CHECK(pad.str() == "[8X+2]");
    CHECK(pad.word() == "010"); // left padded to exactly i digits
    CHECK(pad.path() == std::vector<Digit>{0, 1, 0});

    AffineCode id;
    CHECK(id.str() == "[X]");
    CHECK(id.word().empty());
    CHECK(id.is_identity());

    CHECK(AffineCode(1, BigInt(0), 3).str() == "[3X]");
    CHECK_THROWS_AS(AffineCode(1, BigInt(3), 3), Error);
    CHECK_THROWS_AS(AffineCode(-1, BigInt(0), 3), Error);
}

TEST_CASE("codes round trip through digit paths") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        int p = 2 + static_cast<int>(rng() % 10);
        int i = 1 + static_cast<int>(rng() % 6);
        BigInt j = BigInt(rng()) % int_pow(p, static_cast<unsigned>(i));
        AffineCode c(i, j, p);
        AffineCode back = word_to_affine(c.path(), p);
        CHECK(back.exponent() == c.exponent());
        CHECK(back.offset() == c.offset());
        CHECK(back.str() == c.str());
    }
}

TEST_CASE("relation type is the leading digit of the code word") {
    CHECK(relation_type(2, BigInt(2), 2) == 1); // word 10
    CHECK(relation_type(2, BigInt(1), 2) == 0); // word 01
    CHECK(relation_type(1, BigInt(0), 2) == 0); // word 0
    CHECK(relation_type(3, BigInt(300), 7) == 6); // 300 = 6*49 + 6
    CHECK_THROWS_AS(relation_type(AffineCode()), Error);
}

TEST_CASE("large bases separate word digits with dots") {
    AffineCode c(2, BigInt(11 * 12 + 3), 12);
    CHECK(c.word() == "11.3");
}
