#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "tmcore/words.hpp"

using namespace tmf;

TEST_CASE("word intervals of short words") {
    const Interval i0 = word_interval(BinaryWord::parse("0"));
    CHECK(i0.low == Rational(0));
    CHECK(i0.high == Rational(1, 2));

    const Interval i01 = word_interval(BinaryWord::parse("01"));
    CHECK(i01.low == Rational(1, 4));
    CHECK(i01.high == Rational(1, 2));

    const Interval i110 = word_interval(BinaryWord::parse("110"));
    CHECK(i110.low == Rational(3, 4));
    CHECK(i110.high == Rational(7, 8));
}

TEST_CASE("interval width is 2^-n") {
    for (int n = 1; n <= 20; ++n) {
        const Interval iv = word_interval(BinaryWord::alternating(n));
        CHECK((iv.high - iv.low) == Rational(1, std::int64_t{1} << n));
    }
}

TEST_CASE("point_to_word digit extraction") {
    CHECK(point_to_word(Rational(1, 3), 4) == BinaryWord::parse("0101"));
    CHECK(point_to_word(Rational(1, 2), 2) == BinaryWord::parse("10"));  // terminating expansion
    CHECK(point_to_word(Rational(5, 8), 3) == BinaryWord::parse("101"));
    CHECK_THROWS_AS(point_to_word(Rational(1, 1), 3), std::invalid_argument);
}

TEST_CASE("word round-trip through midpoints") {
    for (int n = 1; n <= 10; ++n) {
        for (const BinaryWord& w : enumerate_words(n, std::nullopt)) {
            CHECK(point_to_word(word_midpoint(w), n) == w);
        }
    }
}

TEST_CASE("rho2 on rationals") {
    CHECK(rho2(Rational(1, 3), Rational(1, 3)) == 0.0);
    CHECK(rho2(Rational(1, 3), Rational(2, 3)) == 1.0);
    CHECK(rho2(Rational(1, 3), Rational(5, 12)) == 0.25);  // common prefix "01"
    CHECK_THROWS_AS(rho2(Rational(1, 4), Rational(1, 3)), std::domain_error);
}

TEST_CASE("rho2 is an ultrametric") {
    std::mt19937_64 rng(42);
    auto random_point = [&] {
        std::uniform_int_distribution<std::int64_t> dq(1, 5000);
        const std::int64_t q = 2 * dq(rng) + 1;
        std::uniform_int_distribution<std::int64_t> dp(1, q - 1);
        return Rational(dp(rng), q);
    };
    for (int trial = 0; trial < 2000; ++trial) {
        const Rational x = random_point(), y = random_point(), z = random_point();
        const double dxy = rho2(x, y);
        CHECK(dxy == rho2(y, x));
        CHECK((dxy == 0.0) == (x == y));
        CHECK(rho2(x, z) <= std::max(dxy, rho2(y, z)));
    }
}

TEST_CASE("admissibility by run length") {
    CHECK(is_admissible(BinaryWord::parse("0101"), 1));
    CHECK_FALSE(is_admissible(BinaryWord::parse("0011"), 1));
    CHECK(is_admissible(BinaryWord::parse("001100"), 2));
}

TEST_CASE("enumeration counts and order") {
    CHECK(count_words(3, std::nullopt) == 8);
    const auto alt = enumerate_words(3, 1);
    REQUIRE(alt.size() == 2);
    CHECK(alt[0] == BinaryWord::parse("010"));
    CHECK(alt[1] == BinaryWord::parse("101"));
    CHECK(count_words(3, 2) == 6);  // all but 000 and 111
}

TEST_CASE("admissible enumeration matches filtered enumeration") {
    for (int n = 1; n <= 12; ++n) {
        for (int m = 1; m <= 4; ++m) {
            std::uint64_t filtered = 0;
            std::vector<BinaryWord> all = enumerate_words(n, std::nullopt);
            std::vector<BinaryWord> kept;
            for (const auto& w : all)
                if (is_admissible(w, m)) {
                    ++filtered;
                    kept.push_back(w);
                }
            const auto direct = enumerate_words(n, m);
            CHECK(direct.size() == filtered);
            CHECK(direct == kept);  // lexicographic in both paths
        }
    }
}

TEST_CASE("collapse examples") {
    CHECK(collapse_h(BinaryWord::parse("010"), 1) == BinaryWord::parse("010"));
    CHECK(collapse_h(BinaryWord::parse("000"), 2) == BinaryWord::parse("001"));
    CHECK(collapse_h(BinaryWord::parse("0001"), 2) == BinaryWord::parse("0010"));
}

TEST_CASE("collapse is admissible and idempotent") {
    for (int m = 1; m <= 4; ++m) {
        for (int n = m + 1; n <= 12; ++n) {
            const std::uint64_t cells = std::uint64_t{1} << n;
            for (std::uint64_t v = 0; v < cells; ++v) {
                const BinaryWord w = BinaryWord::from_value(v, n);
                const BinaryWord image = collapse_h(w, m);
                CHECK(is_admissible(image, m));
                CHECK(collapse_h(image, m) == image);
                if (is_admissible(w, m)) CHECK(image == w);
            }
        }
    }
}

TEST_CASE("preimage counts") {
    CHECK(preimage_count(BinaryWord::parse("01"), 1) == 2);
    CHECK(preimage_count(BinaryWord::parse("010"), 1) == 4);
    CHECK(preimage_count(BinaryWord::parse("010"), 1) <= 8);
    CHECK(preimage_count(BinaryWord::parse("0101"), 2) == 1);  // no m-run sites
    CHECK_THROWS_AS(preimage_count(BinaryWord::parse("0011"), 1), std::invalid_argument);
}

TEST_CASE("preimage counts follow the run structure and exhaust Sigma^n") {
    for (int m = 1; m <= 4; ++m) {
        for (int n = m + 1; n <= 10; ++n) {
            std::uint64_t mass = 0;
            for (const BinaryWord& w : enumerate_words(n, m)) {
                const std::uint64_t count = preimage_count(w, m);
                CHECK(count == (std::uint64_t{1} << flip_site_count(w, m)));
                CHECK(count <= (std::uint64_t{1} << (n / m)));
                mass += count;
            }
            CHECK(mass == (std::uint64_t{1} << n));
        }
    }
}

TEST_CASE("word serialization round-trips") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> dn(1, 40);
        const int n = dn(rng);
        std::uniform_int_distribution<std::uint64_t> dv(0, (std::uint64_t{1} << n) - 1);
        const BinaryWord w = BinaryWord::from_value(dv(rng), n);
        CHECK(BinaryWord::parse(w.str()) == w);
    }
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-1/3").str() == "-1/3");
    CHECK(Rational(6, 8).str() == "3/4");
}
