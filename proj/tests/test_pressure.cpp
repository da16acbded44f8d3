#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "tmcore/potential.hpp"
#include "tmcore/pressure.hpp"
#include "tmcore/words.hpp"

using namespace tmf;

TEST_CASE("normalizations at t = 0 and t = 1") {
    for (int n : {3, 6, 10, 14}) {
        const auto table = birkhoff_midpoint_table(n);
        CHECK(pressure_approx(n, 0.0, table) == doctest::Approx(kLog2).epsilon(1e-13));
        CHECK(pressure_approx(n, 1.0, table) == doctest::Approx(kLog2).epsilon(1e-10));
    }
    // n = 3 by hand: (P_3(1/8) + P_3(3/8)) / 2 = 2, so p[3](1) = log 2.
    double p3_sum = 0.0;
    for (double x : {1.0 / 8.0, 3.0 / 8.0}) {
        double prod = 1.0;
        for (int l = 0; l < 3; ++l) prod *= 1.0 - std::cos(2.0 * kPi * std::ldexp(1.0, l) * x);
        p3_sum += 0.5 * prod;
    }
    CHECK(p3_sum == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(pressure_approx(3, 1.0) == doctest::Approx(kLog2).epsilon(1e-12));
}

TEST_CASE("domain and grid validation") {
    CHECK_THROWS_AS(pressure_approx(10, -0.5), std::domain_error);
    const double bad[] = {1.0, 0.5};
    CHECK_THROWS_AS(pressure_curve(10, bad), std::invalid_argument);
    const double neg[] = {-1.0, 0.0};
    CHECK_THROWS_AS(pressure_curve(10, neg), std::domain_error);
    CHECK_THROWS_AS(restricted_pressure(5, 5, 1.0), std::invalid_argument);  // m >= n
}

TEST_CASE("pressure curve is convex with the stated envelopes") {
    const double grid[] = {0.0, 0.5, 1.0, 2.0, 4.0};
    const PressureCurve curve = pressure_curve(12, grid);
    // Non-uniform grid: slopes must be nondecreasing.
    double prev_slope = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < curve.t.size(); ++i) {
        const double slope = (curve.p[i] - curve.p[i - 1]) / (curve.t[i] - curve.t[i - 1]);
        CHECK(slope >= prev_slope - 1e-9);
        prev_slope = slope;
    }
    for (std::size_t i = 0; i < curve.t.size(); ++i)
        CHECK(curve.p[i] <= (1.0 + curve.t[i]) * kLog2 + 1e-9);
}

TEST_CASE("finite-n window at t = 8") {
    const double gap = pressure_approx(20, 8.0) - 8.0 * kLogThreeHalves;
    CHECK(gap > -0.15);
    CHECK(gap < 0.35);
}

TEST_CASE("restricted pressure closed cases") {
    // Sigma_1^10 holds the two alternating words, whose representative points
    // are exactly 1/3 and 2/3, so p_1[10](1) = log(3/2) + log(2)/10.
    CHECK(restricted_pressure(1, 10, 1.0) ==
          doctest::Approx(kLogThreeHalves + kLog2 / 10.0).epsilon(1e-13));
    // t = 0 counts admissible words.
    CHECK(restricted_pressure(3, 16, 0.0) ==
          doctest::Approx(std::log(static_cast<double>(count_words(16, 3))) / 16.0)
              .epsilon(1e-13));
    // Negative t is allowed on the restricted shift (psi is bounded there).
    CHECK(std::isfinite(restricted_pressure(2, 10, -1.0)));
    CHECK(std::isfinite(restricted_pressure(2, 10, -4.0)));
}

TEST_CASE("restricted pressure grows with m and stays below the full curve") {
    double prev = -std::numeric_limits<double>::infinity();
    const double full = pressure_approx(12, 1.0);
    for (int m : {1, 2, 3, 4}) {
        const double pm = restricted_pressure(m, 12, 1.0);
        CHECK(pm >= prev - 1e-12);
        CHECK(pm <= full + 0.05);
        prev = pm;
    }
}

TEST_CASE("Legendre transform endpoints and the edge flag") {
    const auto t_grid = default_spectrum_t_grid();
    const PressureCurve curve = pressure_curve(20, t_grid);

    const double alphas[] = {-kLog2, kLogThreeHalves, 0.9};
    const auto pts = legendre(curve, alphas);

    // At alpha = -log 2 the argmax sits at t = 0 (p'(0) > alpha), so
    // p* = -p(0) = -log 2 exactly.
    CHECK_FALSE(pts[0].unbounded);
    CHECK(pts[0].value == doctest::Approx(-kLog2).epsilon(1e-12));
    // At alpha = log(3/2): finite-n bias keeps |p*| near 0.026 at n = 20
    // (shrinking with n); see the verification suite for the decay check.
    CHECK_FALSE(pts[1].unbounded);
    CHECK(std::abs(pts[1].value) <= 0.03);
    // Beyond the maximal Birkhoff slope the sup is infinite: edge-flagged.
    CHECK(pts[2].unbounded);
}

TEST_CASE("Birkhoff spectrum values") {
    const auto t_grid = default_spectrum_t_grid();
    const PressureCurve curve = pressure_curve(20, t_grid);
    const double alphas[] = {-2.0, -kLog2, 0.0, kLogThreeHalves, 0.9};
    const SpectrumCurve b = birkhoff_spectrum(curve, alphas);
    CHECK(b.value[0] == 1.0);  // clamped plateau, exact at the t = 0 corner
    CHECK(b.value[1] == doctest::Approx(1.0).epsilon(0.03));
    CHECK(b.value[2] > 0.0);
    CHECK(b.value[2] < 1.0);
    CHECK(b.value[3] <= 0.04);
    CHECK(b.value[4] == 0.0);  // edge-flagged region
    for (double v : b.value) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("dimension spectrum is the exact reparametrization") {
    const auto t_grid = default_spectrum_t_grid();
    const PressureCurve curve = pressure_curve(16, t_grid);
    std::vector<double> alphas;
    for (int i = 0; i <= 200; ++i) alphas.push_back(0.3 + 0.01 * static_cast<double>(i));
    const SpectrumCurve f = dimension_spectrum(curve, alphas);
    std::vector<double> transformed(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) transformed[i] = kLog2 * (1.0 - alphas[i]);
    const SpectrumCurve b = birkhoff_spectrum(curve, transformed);
    for (std::size_t i = 0; i < alphas.size(); ++i) CHECK(f.value[i] == b.value[i]);

    // Landmarks: f(2) = b(-log 2) ~ 1; f(2 - log3/log2) = b(log(3/2)) ~ 0.
    const double ends[] = {2.0 - std::log(3.0) / kLog2, 1.0, 2.0};
    const SpectrumCurve fe = dimension_spectrum(curve, ends);
    CHECK(fe.value[0] <= 0.05);
    CHECK(fe.value[2] == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("slope of p[n] at zero") {
    for (int n : {4, 6, 10, 14, 20}) {
        const auto table = birkhoff_midpoint_table(n);
        const double analytic = pressure_slope_at_zero(n);
        const double h = 1e-7;
        const double fd = (pressure_approx(n, h, table) - pressure_approx(n, 0.0, table)) / h;
        CHECK(analytic == doctest::Approx(fd).epsilon(1e-5));
        // Closed form of the grid mean: the midpoint grid undersamples the
        // singularities by exactly (4 - 2^(2-n)) log 2, so the slope is
        // -(n - 3 + 2^(2-n)) log 2 / (n - 2), approaching -log 2 from above.
        const double closed =
            -(static_cast<double>(n) - 3.0 + std::ldexp(1.0, 2 - n)) * kLog2 /
            static_cast<double>(n - 2);
        CHECK(analytic == doctest::Approx(closed).epsilon(1e-12));
    }
    // Trend toward p'(0+) = -log 2.
    double prev_err = std::numeric_limits<double>::infinity();
    for (int n : {8, 12, 16, 20}) {
        const double err = std::abs(pressure_slope_at_zero(n) + kLog2);
        CHECK(err < prev_err);
        prev_err = err;
    }
}

TEST_CASE("cylinder-sup route") {
    const auto sups = cylinder_sup_table(10);
    CHECK(cylinder_sup_pressure(10, 0.0, sups) == doctest::Approx(kLog2).epsilon(1e-13));
    // Summing cylinder masses against the upper bound forces q[n](1) >= log 2.
    CHECK(cylinder_sup_pressure(10, 1.0, sups) >= kLog2 - 1e-12);
    const auto table = birkhoff_midpoint_table(10);
    for (double t : {0.0, 1.0, 3.0, 6.0, 10.0}) {
        CHECK(std::abs(cylinder_sup_pressure(10, t, sups) - pressure_approx(10, t, table)) <=
              0.13);
    }
    CHECK_THROWS_AS(cylinder_sup_pressure(10, -1.0, sups), std::domain_error);
}

TEST_CASE("parallel reductions are thread-count independent") {
    const auto t1 = birkhoff_midpoint_table(14, 1);
    const auto t4 = birkhoff_midpoint_table(14, 4);
    REQUIRE(t1.size() == t4.size());
    for (std::size_t i = 0; i < t1.size(); ++i) CHECK(t1[i] == t4[i]);
    CHECK(pressure_approx(14, 2.5, t1, 1) == pressure_approx(14, 2.5, t4, 4));
    const auto r1 = restricted_rep_table(2, 12, 1);
    const auto r3 = restricted_rep_table(2, 12, 3);
    CHECK(r1 == r3);
}
