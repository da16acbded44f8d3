#include "tmcore/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "tmcore/entropy.hpp"
#include "tmcore/optimize.hpp"
#include "tmcore/potential.hpp"
#include "tmcore/pressure.hpp"
#include "tmcore/riesz.hpp"
#include "tmcore/words.hpp"

namespace tmf {

namespace {

// Pinned reference constants.
constexpr double kEntropyRef = 0.50638399544731967430;  // 20-digit metric entropy
constexpr double kInfoDimRef = 0.7305;
constexpr double kEnergyExpRef = 0.6427;
const double kBetaMaxRef = kLogThreeHalves / kLog2;       // 0.584962500721156...
const double kMinLocalDimRef = 2.0 - std::log(3.0) / kLog2;  // 0.415037499278844...

Check make_check(std::string name, double expected, double observed, double tol) {
    const bool pass = std::abs(observed - expected) <= tol;
    return {std::move(name), expected, observed, tol, pass};
}

Check make_upper_check(std::string name, double bound, double observed, double slack = 0.0) {
    return {std::move(name), bound, observed, slack, observed <= bound + slack};
}

Check make_lower_check(std::string name, double bound, double observed, double slack = 0.0) {
    return {std::move(name), bound, observed, slack, observed >= bound - slack};
}

std::mt19937_64 seeded_rng(std::uint64_t salt) { return std::mt19937_64(0x51a9e4c2d3ULL ^ salt); }

Rational random_odd_rational(std::mt19937_64& rng, std::int64_t max_den) {
    std::uniform_int_distribution<std::int64_t> den_dist(1, max_den / 2);
    const std::int64_t q = 2 * den_dist(rng) + 1;  // odd, so never dyadic
    std::uniform_int_distribution<std::int64_t> num_dist(1, q - 1);
    return Rational(num_dist(rng), q);
}

}  // namespace

VerifyReport criterion_normalizations(int threads) {
    double worst0 = 0.0;
    double worst1 = 0.0;
    for (int n = 3; n <= 20; ++n) {
        const auto table = birkhoff_midpoint_table(n, threads);
        worst0 = std::max(worst0, std::abs(pressure_approx(n, 0.0, table, threads) - kLog2));
        worst1 = std::max(worst1, std::abs(pressure_approx(n, 1.0, table, threads) - kLog2));
    }
    VerifyReport r;
    r.checks.push_back(make_check("pressure normalization p[n](0) = log 2, n = 3..20", 0.0,
                                  worst0, 1e-12));
    r.checks.push_back(make_check("pressure normalization p[n](1) = log 2, n = 3..20", 0.0,
                                  worst1, 1e-9));
    return r;
}

VerifyReport criterion_max_exponent(int) {
    const Rational third(1, 3);
    double worst = 0.0;
    for (long n = 1; n <= 60; ++n)
        worst = std::max(worst, std::abs(beta_estimate(third, n) - kBetaMaxRef));
    VerifyReport r;
    r.checks.push_back(
        make_check("beta(1/3, n) = log(3/2)/log 2, n = 1..60", 0.0, worst, 1e-12));
    return r;
}

VerifyReport criterion_argmax_location(int threads) {
    int matches = 0;
    for (int n = 2; n <= 22; ++n) {
        const MidpointArgmax am = argmax_on_midpoints(n, threads);
        if (am.word == BinaryWord::alternating(n)) ++matches;
    }
    VerifyReport r;
    r.checks.push_back(
        make_check("argmax of psi_n on [0,1/2] lies in the alternating cylinder, n = 2..22",
                   21.0, static_cast<double>(matches), 0.0));
    return r;
}

VerifyReport criterion_gap_constant(int threads) {
    double worst = -std::numeric_limits<double>::infinity();
    for (int n = 2; n <= 22; ++n) worst = std::max(worst, max_gap_constant(n, threads));
    VerifyReport r;
    r.checks.push_back(make_upper_check(
        "max psi_n - n log(3/2) <= pi + log(4/3), n = 2..22", kBirkhoffGapBound, worst));
    return r;
}

VerifyReport criterion_gibbs_bound(int threads) {
    // Every cylinder up to length 10 at level n + 4.
    std::uint64_t failures = 0;
    std::uint64_t total = 0;
    for (int n = 1; n <= 10; ++n) {
        const TrigPolynomial poly = fourier_coeffs(n + 4);
        const auto masses = cylinder_masses(n, poly, threads);
        for (std::uint64_t v = 0; v < masses.size(); ++v) {
            const BinaryWord w = BinaryWord::from_value(v, n);
            const Interval cyl = word_interval(w);
            const double a = cyl.low.value();
            const double b = cyl.high.value();
            const double mid = 0.5 * (a + b);
            auto f = [n](double x) { return psi_n(x, n); };
            const double sup = std::max(golden_section_max(f, a, mid, 1e-12),
                                        golden_section_max(f, mid, b, 1e-12));
            const double bound = std::ldexp(1.0, -n) * std::exp(sup);
            ++total;
            if (!(masses[v] <= bound * (1.0 + 1e-9))) ++failures;
        }
    }
    // 100 random words of length 16 at level 20.
    auto rng = seeded_rng(5);
    const TrigPolynomial poly20 = fourier_coeffs(20);
    std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << 16) - 1);
    std::uint64_t failures16 = 0;
    for (int i = 0; i < 100; ++i) {
        const BinaryWord w = BinaryWord::from_value(dist(rng), 16);
        const double mass = cylinder_mass(w, poly20, threads);
        const Interval cyl = word_interval(w);
        const double a = cyl.low.value();
        const double b = cyl.high.value();
        const double mid = 0.5 * (a + b);
        auto f = [](double x) { return psi_n(x, 16); };
        const double sup = std::max(golden_section_max(f, a, mid, 1e-12),
                                    golden_section_max(f, mid, b, 1e-12));
        if (!(mass <= std::ldexp(1.0, -16) * std::exp(sup) * (1.0 + 1e-9))) ++failures16;
    }
    VerifyReport r;
    r.checks.push_back(make_check("Gibbs upper bound failures over all words, n <= 10, N = n+4",
                                  0.0, static_cast<double>(failures), 0.0));
    r.checks.push_back(make_check("Gibbs upper bound failures over 100 random 16-words, N = 20",
                                  0.0, static_cast<double>(failures16), 0.0));
    (void)total;
    return r;
}

VerifyReport criterion_partition_of_unity(int threads) {
    const TrigPolynomial poly = fourier_coeffs(14);
    const auto m8 = cylinder_masses(8, poly, threads);
    double total = 0.0;
    for (double v : m8) total += v;
    const auto m7 = cylinder_masses(7, poly, threads);
    double worst = 0.0;
    for (std::size_t v = 0; v < m7.size(); ++v)
        worst = std::max(worst, std::abs(m7[v] - (m8[2 * v] + m8[2 * v + 1])));
    VerifyReport r;
    r.checks.push_back(make_check("partition of unity over Sigma^8 at N = 14", 1.0, total, 1e-10));
    r.checks.push_back(make_check("refinement consistency at N = 14", 0.0, worst, 1e-10));
    return r;
}

VerifyReport criterion_local_dimension(int) {
    const Rational third(1, 3);
    double worst = 0.0;
    for (long n = 1; n <= 200; ++n) {
        const LocalDimension d = local_dimension_estimate(third, n);
        worst = std::max(worst, std::abs(d.value - kMinLocalDimRef));
    }
    auto rng = seeded_rng(7);
    double lowest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 1000; ++i) {
        const Rational x = random_odd_rational(rng, 1000000);
        lowest = std::min(lowest, local_dimension_estimate(x, 200).value);
    }
    VerifyReport r;
    r.checks.push_back(
        make_check("local dimension at 1/3 equals 2 - log3/log2, n = 1..200", 0.0, worst, 1e-12));
    r.checks.push_back(make_lower_check("minimal local dimension over 1000 random rationals",
                                        kMinLocalDimRef, lowest, 1e-9));
    return r;
}

VerifyReport criterion_entropy(int) {
    const EntropyResult res = entropy_series(10);
    VerifyReport r;
    r.checks.push_back(make_check("metric entropy h matches the 20-digit reference", kEntropyRef,
                                  res.h.to_double(), 1e-10));
    r.checks.push_back(make_lower_check("entropy summation schemes agree to >= 10 digits", 10.0,
                                        static_cast<double>(res.digits_validated)));
    return r;
}

VerifyReport criterion_derived_constants(int) {
    const EntropyResult res = entropy_series(10);
    const double d1 = information_dimension(res);
    const double e = energy_exponent();
    VerifyReport r;
    r.checks.push_back(make_check("information dimension D1 = h/log 2", kInfoDimRef, d1, 5e-4));
    r.checks.push_back(make_check("energy exponent 1 - log2((1+sqrt 17)/4)", kEnergyExpRef, e, 5e-4));
    r.checks.push_back(make_lower_check("D1 strictly exceeds the energy exponent", e, d1, -1e-12));
    return r;
}

VerifyReport criterion_spectrum_endpoints(int threads) {
    const auto t_grid = default_spectrum_t_grid();
    const PressureCurve curve = pressure_curve(20, t_grid, threads);
    const double endpoints[2] = {-kLog2, kLogThreeHalves};
    const SpectrumCurve at_ends = birkhoff_spectrum(curve, endpoints);

    std::vector<double> alphas;
    for (int i = 0; i <= 400; ++i) alphas.push_back(-1.5 + 0.005 * static_cast<double>(i));
    const SpectrumCurve b = birkhoff_spectrum(curve, alphas);
    double concavity = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < b.value.size(); ++i) {
        if (b.value[i - 1] > 1e-9 && b.value[i] > 1e-9 && b.value[i + 1] > 1e-9)
            concavity = std::max(concavity, b.value[i + 1] - 2 * b.value[i] + b.value[i - 1]);
    }

    std::vector<double> dim_alphas;
    for (int i = 0; i <= 300; ++i) dim_alphas.push_back(0.3 + 0.006 * static_cast<double>(i));
    const SpectrumCurve f = dimension_spectrum(curve, dim_alphas);
    std::vector<double> transformed(dim_alphas.size());
    for (std::size_t i = 0; i < dim_alphas.size(); ++i)
        transformed[i] = kLog2 * (1.0 - dim_alphas[i]);
    const SpectrumCurve b_ref = birkhoff_spectrum(curve, transformed);
    bool identical = true;
    for (std::size_t i = 0; i < f.value.size(); ++i)
        identical = identical && f.value[i] == b_ref.value[i];

    // Finite-n bias at the right endpoint: the gap min_t (p[n](t) - t log(3/2))
    // shrinks like ~0.5/n (measured 0.0327 / 0.0292 / 0.0264 / 0.0241 at
    // n = 16 / 18 / 20 / 22), so b(log(3/2)) sits at 0.0381 for n = 20.
    // The tolerance is pinned at the re-measured level and the decay toward
    // the exact value 0 is checked across n.
    const SpectrumCurve end16 = birkhoff_spectrum(16, {&endpoints[1], 1}, threads);
    const SpectrumCurve end18 = birkhoff_spectrum(18, {&endpoints[1], 1}, threads);
    const bool endpoint_decay =
        end16.value[0] > end18.value[0] && end18.value[0] > at_ends.value[1];

    VerifyReport r;
    r.checks.push_back(make_lower_check("Birkhoff spectrum at alpha = -log 2", 0.97,
                                        at_ends.value[0]));
    r.checks.push_back(make_upper_check("Birkhoff spectrum at alpha = log(3/2)", 0.04,
                                        at_ends.value[1]));
    r.checks.push_back(make_check("spectrum value at log(3/2) decays over n = 16, 18, 20", 1.0,
                                  endpoint_decay ? 1.0 : 0.0, 0.0));
    r.checks.push_back(make_upper_check("discrete concavity of the spectrum on its support",
                                        0.0, concavity, 1e-6));
    r.checks.push_back(make_check("dimension spectrum is the reparametrized Birkhoff curve",
                                  1.0, identical ? 1.0 : 0.0, 0.0));
    return r;
}

VerifyReport criterion_pressure_shape(int threads) {
    const auto t_grid = default_spectrum_t_grid();
    const PressureCurve curve = pressure_curve(20, t_grid, threads);
    double convexity = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < curve.p.size(); ++i)
        convexity = std::min(convexity, curve.p[i + 1] - 2 * curve.p[i] + curve.p[i - 1]);
    double upper_excess = -std::numeric_limits<double>::infinity();
    double lower_deficit = -std::numeric_limits<double>::infinity();
    const double slack = (kLog2 + kBirkhoffGapGlobal) / 18.0;
    for (std::size_t i = 0; i < curve.t.size(); ++i) {
        const double t = curve.t[i];
        upper_excess = std::max(upper_excess, curve.p[i] - (1.0 + t) * kLog2);
        lower_deficit = std::max(lower_deficit, (t * kLogThreeHalves - slack) - curve.p[i]);
    }
    const double a12 = pressure_approx(12, 8.0, threads) - 8.0 * kLogThreeHalves;
    const double a16 = pressure_approx(16, 8.0, threads) - 8.0 * kLogThreeHalves;
    const double a20 = pressure_approx(20, 8.0, threads) - 8.0 * kLogThreeHalves;

    VerifyReport r;
    r.checks.push_back(
        make_lower_check("discrete convexity of p[20] on [0, 40]", 0.0, convexity, 1e-6));
    r.checks.push_back(
        make_upper_check("upper envelope p[20](t) <= (1+t) log 2", 0.0, upper_excess, 1e-9));
    r.checks.push_back(make_upper_check("lower envelope p[20](t) >= t log(3/2) - slack", 0.0,
                                        lower_deficit));
    const bool decreasing = a12 > a16 && a16 > a20;
    r.checks.push_back(make_check("p[n](8) - 8 log(3/2) decreasing over n = 12, 16, 20", 1.0,
                                  decreasing ? 1.0 : 0.0, 0.0));
    return r;
}

VerifyReport criterion_restricted_monotone(int threads) {
    const int ms[5] = {1, 2, 3, 4, 6};
    const double ts[4] = {0.0, 0.5, 1.0, 2.0};
    const auto full_table = birkhoff_midpoint_table(20, threads);
    std::map<int, std::vector<double>> rep;
    for (int m : ms) rep[m] = restricted_rep_table(m, 20, threads);

    double worst_monotone = -std::numeric_limits<double>::infinity();
    double worst_excess = -std::numeric_limits<double>::infinity();
    for (double t : ts) {
        const double full = pressure_approx(20, t, full_table, threads);
        double prev = -std::numeric_limits<double>::infinity();
        for (int m : ms) {
            const double pm = [&] {
                double peak = -std::numeric_limits<double>::infinity();
                for (double s : rep[m]) peak = std::max(peak, t * s);
                double sum = 0.0;
                for (double s : rep[m]) sum += std::exp(t * s - peak);
                return (peak + std::log(sum)) / 20.0;
            }();
            worst_monotone = std::max(worst_monotone, prev - pm);
            worst_excess = std::max(worst_excess, pm - full - 0.05);
            prev = pm;
        }
    }
    VerifyReport r;
    r.checks.push_back(make_upper_check(
        "restricted pressure nondecreasing in m over {1,2,3,4,6}", 0.0, worst_monotone, 1e-12));
    r.checks.push_back(make_upper_check(
        "restricted pressure below full pressure + 0.05", 0.0, worst_excess));
    return r;
}

VerifyReport criterion_collapse(int) {
    std::uint64_t bad_admissible = 0;
    std::uint64_t bad_idempotent = 0;
    std::uint64_t bad_count = 0;
    std::uint64_t bad_bound = 0;
    std::uint64_t bad_total = 0;
    for (int m = 1; m <= 4; ++m) {
        for (int n = m + 1; n <= 12; ++n) {
            const std::uint64_t cells = std::uint64_t{1} << n;
            std::vector<std::uint64_t> hist(cells, 0);
            for (std::uint64_t v = 0; v < cells; ++v) {
                const BinaryWord image = collapse_h(BinaryWord::from_value(v, n), m);
                if (!is_admissible(image, m)) ++bad_admissible;
                if (collapse_h(image, m) != image) ++bad_idempotent;
                ++hist[image.value()];
            }
            std::uint64_t mass = 0;
            enumerate_words(n, m, [&](const BinaryWord& w) {
                const std::uint64_t count = hist[w.value()];
                mass += count;
                if (count != (std::uint64_t{1} << flip_site_count(w, m))) ++bad_count;
                if (count > (std::uint64_t{1} << (n / m))) ++bad_bound;
            });
            if (mass != cells) ++bad_total;
        }
    }
    VerifyReport r;
    r.checks.push_back(make_check("collapse outputs admissible", 0.0,
                                  static_cast<double>(bad_admissible), 0.0));
    r.checks.push_back(make_check("collapse idempotent", 0.0,
                                  static_cast<double>(bad_idempotent), 0.0));
    r.checks.push_back(make_check("preimage count equals 2^i from the run structure", 0.0,
                                  static_cast<double>(bad_count), 0.0));
    r.checks.push_back(make_check("preimage count within 2^floor(n/m)", 0.0,
                                  static_cast<double>(bad_bound), 0.0));
    r.checks.push_back(make_check("preimage masses sum to 2^n", 0.0,
                                  static_cast<double>(bad_total), 0.0));
    return r;
}

VerifyReport criterion_g_identity(int) {
    VerifyReport r;
    r.checks.push_back(make_check("g-function identity over 10^4 samples", 0.0,
                                  g_identity_check(10000), 1e-12));
    return r;
}

VerifyReport criterion_pressure_oracle(int threads) {
    // Uniform distance between the two pressure routes on t in [0, 10];
    // measured 0.111 / 0.093 / 0.081 at n = 10 / 12 / 14, shrinking as both
    // routes approach the common limit.
    auto max_diff = [threads](int n) {
        const auto sups = cylinder_sup_table(n, threads);
        const auto table = birkhoff_midpoint_table(n, threads);
        double worst = 0.0;
        for (int i = 0; i <= 20; ++i) {
            const double t = 0.5 * static_cast<double>(i);
            worst = std::max(worst, std::abs(cylinder_sup_pressure(n, t, sups, threads) -
                                             pressure_approx(n, t, table, threads)));
        }
        return worst;
    };
    const double d10 = max_diff(10);
    const double d12 = max_diff(12);
    const double d14 = max_diff(14);
    VerifyReport r;
    r.checks.push_back(make_check(
        "cylinder-sup pressure matches midpoint approximant on [0, 10], n = 14", 0.0, d14, 0.10));
    r.checks.push_back(make_check("route disagreement shrinks over n = 10, 12, 14", 1.0,
                                  d10 > d12 && d12 > d14 ? 1.0 : 0.0, 0.0));
    return r;
}

const std::vector<CriterionEntry>& all_criteria() {
    static const std::vector<CriterionEntry> entries = {
        {1, "normalizations", &criterion_normalizations},
        {2, "maximal scaling exponent", &criterion_max_exponent},
        {3, "argmax location", &criterion_argmax_location},
        {4, "gap constant", &criterion_gap_constant},
        {5, "Gibbs upper bound", &criterion_gibbs_bound},
        {6, "partition of unity", &criterion_partition_of_unity},
        {7, "minimal local dimension", &criterion_local_dimension},
        {8, "metric entropy", &criterion_entropy},
        {9, "derived constants", &criterion_derived_constants},
        {10, "spectrum endpoints", &criterion_spectrum_endpoints},
        {11, "pressure shape", &criterion_pressure_shape},
        {12, "restricted pressure monotonicity", &criterion_restricted_monotone},
        {13, "collapse algorithm", &criterion_collapse},
        {14, "g-function identity", &criterion_g_identity},
        {15, "pressure oracle cross-check", &criterion_pressure_oracle},
    };
    return entries;
}

namespace {

std::vector<int> suite_indices(const std::string& suite) {
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
    if (suite == "symbolic") return {13};
    if (suite == "potential") return {2, 3, 4};
    if (suite == "measure") return {5, 6, 7, 14};
    if (suite == "pressure") return {1, 10, 11, 12, 15};
    if (suite == "entropy") return {8, 9};
    return {};
}

}  // namespace

bool is_known_suite(const std::string& suite) { return !suite_indices(suite).empty(); }

VerifyReport run_suite(const std::string& suite, int threads) {
    const auto indices = suite_indices(suite);
    if (indices.empty()) throw std::invalid_argument("unknown verify suite: " + suite);
    VerifyReport out;
    for (int idx : indices) out.append(all_criteria()[static_cast<std::size_t>(idx - 1)].run(threads));
    return out;
}

}  // namespace tmf
