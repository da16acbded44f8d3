#include "tmcore/riesz.hpp"

#include <quadmath.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "tmcore/config.hpp"
#include "tmcore/optimize.hpp"
#include "tmcore/parallel.hpp"
#include "tmcore/potential.hpp"

namespace tmf {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// sin(2 pi k v / 2^n) with the angle reduced exactly in integers first.
inline double sin_dyadic_multiple(std::uint64_t k, std::uint64_t v, int n) {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    const std::uint64_t r = (k * v) & mask;
    return std::sin(kTwoPi * (static_cast<double>(r) * std::ldexp(1.0, -n)));
}

// F(x) = sum_{k>=1} c_k sin(2 pi k x) / (pi k) at x = v / 2^n; the mass of
// [a, b] is c_0 (b - a) + F(b) - F(a).
double antiderivative_at(const TrigPolynomial& poly, std::uint64_t v, int n, int threads) {
    const std::size_t kmax = poly.coeffs.size();
    return block_sum(kmax - 1, threads, [&](std::size_t i) {
        const std::uint64_t k = i + 1;
        const double c = poly.coeffs[k];
        if (c == 0.0) return 0.0;
        return c * sin_dyadic_multiple(k, v, n) / (kPi * static_cast<double>(k));
    });
}

// Near-singular cylinders have masses far below the double-precision
// cancellation floor of the frequency sum (the terms are O(1), the result can
// be ~1e-19). The coefficients are dyadic rationals held exactly by doubles,
// so a quad-precision pass over the same closed form recovers the value.
// Anything above this threshold is already accurate to ~1e-15 absolute.
constexpr double kMassRescueThreshold = 1e-13;

double cylinder_mass_quad(const TrigPolynomial& poly, std::uint64_t v, int n, int threads = 0) {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    const __float128 scale = __float128(1) / __float128(std::uint64_t{1} << n);
    const __float128 two_pi = 2 * M_PIq;
    const std::size_t terms = poly.coeffs.size() - 1;
    const std::size_t nblocks = terms ? (terms + kReduceBlock - 1) / kReduceBlock : 0;
    std::vector<__float128> partial(nblocks, 0);
    for_each_block(terms, threads, [&](std::size_t lo, std::size_t hi, std::size_t b) {
        __float128 acc = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            const std::size_t k = i + 1;
            const double c = poly.coeffs[k];
            if (c == 0.0) continue;
            const std::uint64_t rb = (k * (v + 1)) & mask;
            const std::uint64_t ra = (k * v) & mask;
            const __float128 diff = sinq(two_pi * (__float128(rb) * scale)) -
                                    sinq(two_pi * (__float128(ra) * scale));
            acc += __float128(c) * diff / (M_PIq * __float128(k));
        }
        partial[b] = acc;
    });
    __float128 acc = __float128(poly.coeffs[0]) * scale;
    for (const __float128& p : partial) acc += p;
    return static_cast<double>(acc);
}

double sup_exp_psi_n(const BinaryWord& w, int n) {
    // psi_n is concave on each half of <w> (the halves are length n+1
    // cylinders, finer than the 2^{n-1} humps), so two golden sections
    // bracket the sup.
    const Interval cyl = word_interval(w);
    const double a = cyl.low.value();
    const double b = cyl.high.value();
    const double mid = 0.5 * (a + b);
    auto f = [n](double x) { return psi_n(x, n); };
    const double s1 = golden_section_max(f, a, mid, 1e-12);
    const double s2 = golden_section_max(f, mid, b, 1e-12);
    return std::exp(std::max(s1, s2));
}

}  // namespace

double TrigPolynomial::evaluate(double x) const {
    double s = coeffs.empty() ? 0.0 : coeffs[0];
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        s += 2.0 * coeffs[k] * std::cos(kTwoPi * static_cast<double>(k) * x);
    return s;
}

TrigPolynomial fourier_coeffs(int N) {
    require(N >= 0, "fourier_coeffs: N must be >= 0");
    if (N > resource_cap(22))
        throw std::length_error("fourier_coeffs: N exceeds the resource cap");
    std::vector<double> c{1.0};
    for (int lev = 0; lev < N; ++lev) {
        const std::size_t half = c.size();  // 2^lev
        std::vector<double> next(2 * half);
        for (std::size_t k = 0; k < 2 * half; ++k) {
            double v = k < half ? c[k] : 0.0;
            const std::size_t mirror = k >= half ? k - half : half - k;
            if (mirror < half) v -= 0.5 * c[mirror];
            next[k] = v;
        }
        c = std::move(next);
    }
    return {N, std::move(c)};
}

std::vector<Rational> fourier_coeffs_exact(int N) {
    require(N >= 0 && N <= 16, "fourier_coeffs_exact: need 0 <= N <= 16");
    std::vector<Rational> c{Rational(1)};
    const Rational half_r(1, 2);
    for (int lev = 0; lev < N; ++lev) {
        const std::size_t half = c.size();
        std::vector<Rational> next(2 * half);
        for (std::size_t k = 0; k < 2 * half; ++k) {
            Rational v = k < half ? c[k] : Rational(0);
            const std::size_t mirror = k >= half ? k - half : half - k;
            if (mirror < half) v = v - half_r * c[mirror];
            next[k] = v;
        }
        c = std::move(next);
    }
    return c;
}

double cylinder_mass(const BinaryWord& w, const TrigPolynomial& poly, int threads) {
    const int n = w.size();
    require(n <= 32, "cylinder_mass: word too long");
    const std::uint64_t v = w.value();
    const double width = std::ldexp(1.0, -n);
    const double fa = antiderivative_at(poly, v, n, threads);
    const double fb = antiderivative_at(poly, v + 1, n, threads);
    const double mass = poly.coeffs[0] * width + (fb - fa);
    if (std::abs(mass) < kMassRescueThreshold) return cylinder_mass_quad(poly, v, n, threads);
    return mass;
}

CylinderMass cylinder_mass(const BinaryWord& w, int N, int threads) {
    const TrigPolynomial poly = fourier_coeffs(N);
    return {w, N, cylinder_mass(w, poly, threads)};
}

std::vector<double> cylinder_masses(int n, const TrigPolynomial& poly, int threads) {
    require(n >= 1 && n <= 26, "cylinder_masses: n out of range");
    const std::size_t cells = std::size_t{1} << n;
    std::vector<double> grid(cells + 1);
    for_each_block(cells + 1, threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
        for (std::size_t v = lo; v < hi; ++v)
            grid[v] = antiderivative_at(poly, v, n, 1);
    });
    const double width = std::ldexp(1.0, -n);
    std::vector<double> masses(cells);
    std::vector<std::size_t> rescue;
    for (std::size_t v = 0; v < cells; ++v) {
        masses[v] = poly.coeffs[0] * width + (grid[v + 1] - grid[v]);
        if (std::abs(masses[v]) < kMassRescueThreshold) rescue.push_back(v);
    }
    for_each_block(rescue.size(), threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
        for (std::size_t i = lo; i < hi; ++i)
            masses[rescue[i]] = cylinder_mass_quad(poly, rescue[i], n);
    });
    return masses;
}

GibbsCheck gibbs_upper_check(const BinaryWord& w, int N, int threads) {
    const int n = w.size();
    require(n <= 20, "gibbs_upper_check: word length must be <= 20");
    require(N >= n, "gibbs_upper_check: need N >= word length");
    const double mass = cylinder_mass(w, fourier_coeffs(N), threads);
    const double bound = std::ldexp(1.0, -n) * sup_exp_psi_n(w, n);
    return {mass, bound, mass <= bound * (1.0 + 1e-9)};
}

double gibbs_lower_ratio(const BinaryWord& w, int N, int m, int threads) {
    const int n = w.size();
    require(m >= 1 && is_admissible(w, m), "gibbs_lower_ratio: word must be admissible");
    const double mass = cylinder_mass(w, fourier_coeffs(N), threads);
    // Sample the inf of psi_n over <w> intersected with the subshift at the
    // representative points of admissible extensions by m further symbols.
    double inf_psi = std::numeric_limits<double>::infinity();
    const int ext = std::min(m, 4);
    enumerate_words(n + ext, m, [&](const BinaryWord& u) {
        bool prefix = true;
        for (int i = 0; i < n && prefix; ++i) prefix = (u.bits[i] == w.bits[i]);
        if (!prefix) return;
        const std::int64_t v = static_cast<std::int64_t>(u.value());
        const std::int64_t q = std::int64_t{3} << (n + ext);
        const std::int64_t c = u.bits[n + ext - 1] == 0 ? 2 : 1;
        inf_psi = std::min(inf_psi, psi_n(Rational(3 * v + c, q), n));
    });
    (void)threads;
    return mass / (std::ldexp(1.0, -n) * std::exp(inf_psi));
}

LocalDimension local_dimension_estimate(const Rational& x, long n) {
    require(n >= 1, "local_dimension_estimate: n must be >= 1");
    require(!x.is_dyadic(), "local_dimension_estimate: x must not be dyadic");
    const double s = psi_n(x, n);
    if (s == kNegInf) return {std::numeric_limits<double>::infinity(), true};
    return {1.0 - s / (static_cast<double>(n) * kLog2), false};
}

double beta_estimate(const Rational& x, long n) {
    return psi_n(x, n) / (static_cast<double>(n) * kLog2);
}

double beta_estimate(double x, long n) {
    return psi_n(x, n) / (static_cast<double>(n) * kLog2);
}

double g_identity_check(int samples) {
    require(samples >= 1, "g_identity_check: samples must be >= 1");
    auto g = [](double x) { return 0.5 * (1.0 - std::cos(kTwoPi * x)); };
    std::mt19937_64 rng(0x7d3a1f2cULL);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double y = unif(rng);
        const double err = std::abs(g(0.5 * y) + g(0.5 * y + 0.5) - 1.0);
        worst = std::max(worst, err);
    }
    return worst;
}

}  // namespace tmf
