#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "tmcore/potential.hpp"
#include "tmcore/rational.hpp"

using namespace tmf;

namespace {

Rational random_odd_rational(std::mt19937_64& rng, std::int64_t max_half_den) {
    std::uniform_int_distribution<std::int64_t> dq(1, max_half_den);
    const std::int64_t q = 2 * dq(rng) + 1;
    std::uniform_int_distribution<std::int64_t> dp(1, q - 1);
    return Rational(dp(rng), q);
}

}  // namespace

TEST_CASE("psi at landmark points") {
    CHECK(psi(0.5) == doctest::Approx(kLog2).epsilon(1e-15));
    CHECK(psi(Rational(1, 3)) == doctest::Approx(kLogThreeHalves).epsilon(1e-15));
    CHECK(psi(0.0) == kNegInf);
    CHECK(psi(1.0) == kNegInf);  // reduces mod 1 to the singularity
    CHECK(psi(0.25) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(psi(1.25) == psi(0.25));  // 1-periodic
    CHECK(psi(Rational(7, 3)) == psi(Rational(1, 3)));
}

TEST_CASE("psi range stays below log 2") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) CHECK(psi(unif(rng)) <= kLog2);
}

TEST_CASE("psi_prime values and pole") {
    CHECK(psi_prime(0.5) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(psi_prime(0.25) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK_THROWS_AS(psi_prime(0.0), std::domain_error);
    CHECK_THROWS_AS(psi_prime(1.0), std::domain_error);
}

TEST_CASE("psi_prime matches central finite differences") {
    const double h = 1e-6;
    for (int i = 1; i <= 100; ++i) {
        const double x = static_cast<double>(i) / 101.0;
        const double fd = (psi(x + h) - psi(x - h)) / (2.0 * h);
        CHECK(psi_prime(x) == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("psi_prime obeys the 2 max(1/x, 1/(1-x)) bound") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unif(1e-6, 1.0 - 1e-6);
    for (int i = 0; i < 10000; ++i) {
        const double x = unif(rng);
        const double bound = 2.0 * std::max(1.0 / x, 1.0 / (1.0 - x));
        CHECK(std::abs(psi_prime(x)) <= bound * (1.0 + 1e-12));
    }
}

TEST_CASE("psi is concave on (0,1)") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(1e-9, 1.0 - 1e-9);
    for (int i = 0; i < 10000; ++i) {
        const double a = unif(rng);
        const double b = unif(rng);
        CHECK(psi(0.5 * (a + b)) >= 0.5 * (psi(a) + psi(b)) - 1e-12);
    }
}

TEST_CASE("Birkhoff sums on exact orbits") {
    CHECK(psi_n(Rational(1, 3), 5) ==
          doctest::Approx(5.0 * kLogThreeHalves).epsilon(1e-14));
    CHECK(psi_n(Rational(1, 2), 2) == kNegInf);  // doubling reaches 0

    // Independent oracle: the truncated product form evaluated directly.
    double direct = 0.0;
    for (int l = 0; l < 4; ++l)
        direct += std::log(1.0 - std::cos(2.0 * kPi * std::ldexp(1.0, l) / 5.0));
    CHECK(psi_n(Rational(1, 5), 4) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("Birkhoff sum symmetry psi_n(1-x) = psi_n(x)") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> dn(1, 20);
    for (int i = 0; i < 10000; ++i) {
        const Rational x = random_odd_rational(rng, 100000);
        const long n = dn(rng);
        CHECK(psi_n(x, n) == doctest::Approx(psi_n(Rational(1) - x, n)).epsilon(1e-12));
    }
}

TEST_CASE("Birkhoff cocycle recursions") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> dn(1, 20);
    for (int i = 0; i < 2000; ++i) {
        const Rational x = random_odd_rational(rng, 100000);
        const long n = dn(rng);
        const Rational two_x = mod1(Rational(2) * x);
        const double lhs = psi_n(x, n + 1);
        CHECK(lhs == doctest::Approx(psi_n(two_x, n) + psi(x)).epsilon(1e-10));
        Rational shifted = x;
        for (long l = 0; l < n; ++l) shifted = mod1(Rational(2) * shifted);
        CHECK(lhs == doctest::Approx(psi_n(x, n) + psi(shifted)).epsilon(1e-10));
    }
}

TEST_CASE("Birkhoff sums respect the global gap bound") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> dn(1, 40);
    for (int i = 0; i < 5000; ++i) {
        const Rational x = random_odd_rational(rng, 1000000);
        const long n = dn(rng);
        CHECK(psi_n(x, n) <= static_cast<double>(n) * kLogThreeHalves + kBirkhoffGapGlobal);
    }
}

TEST_CASE("truncated potential") {
    CHECK(psi_truncated(0.5, 3) == doctest::Approx(kLog2).epsilon(1e-15));
    CHECK(psi_truncated(std::ldexp(1.0, -6), 3) == 0.0);
    const double edge = 1.0 / 16.0;  // boundary of D(3) is included
    CHECK(psi_truncated(edge, 3) == psi(edge));
    CHECK(psi_truncated(0.3, 2) == psi(0.3));
    CHECK(psi_truncated(0.3, 2) >= psi(0.3));  // psi^D >= psi everywhere
    CHECK(psi_truncated(0.01, 2) >= psi(0.01));
}

TEST_CASE("argmax lands in the alternating cylinder") {
    CHECK(argmax_on_midpoints(2).word == BinaryWord::parse("01"));
    CHECK(argmax_on_midpoints(3).word == BinaryWord::parse("010"));
    CHECK(argmax_on_midpoints(10).word == BinaryWord::alternating(10));
    for (int n = 2; n <= 14; ++n) {
        const MidpointArgmax am = argmax_on_midpoints(n);
        CHECK(am.word == BinaryWord::alternating(n));
        CHECK(am.x < Rational(1, 2));
        CHECK(am.value == doctest::Approx(psi_n(am.x, n)).epsilon(1e-12));
    }
}

TEST_CASE("midpoint gap stays below pi + log(4/3)") {
    for (int n = 2; n <= 14; ++n) CHECK(max_gap_constant(n) <= kBirkhoffGapBound);
    CHECK_THROWS_AS(max_gap_constant(1), std::invalid_argument);
}

TEST_CASE("real-argument Birkhoff sums track the rational path") {
    for (long n = 1; n <= 12; ++n) {
        CHECK(psi_n(0.2, n) == doctest::Approx(psi_n(Rational(1, 5), n)).epsilon(1e-9));
    }
}
