#include "tmcore/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "tmcore/config.hpp"
#include "tmcore/parallel.hpp"

namespace tmf {

namespace {

inline double psi_fraction(double frac) {
    // frac in [0, 1)
    if (frac == 0.0) return kNegInf;
    return kLog2 + 2.0 * std::log(std::sin(kPi * frac));
}

}  // namespace

double psi(double x) {
    x -= std::floor(x);
    return psi_fraction(x);
}

double psi(const Rational& x) {
    const Rational r = mod1(x);
    if (r.num == 0) return kNegInf;
    return kLog2 + 2.0 * std::log(std::sin(kPi * static_cast<double>(r.num) /
                                           static_cast<double>(r.den)));
}

double psi_prime(double x) {
    if (x <= 0.0 || x >= 1.0) throw std::domain_error("psi_prime: pole at integer points");
    return 2.0 * kPi * std::cos(kPi * x) / std::sin(kPi * x);
}

double psi_n(double x, long n) {
    if (n < 1) throw std::invalid_argument("psi_n: n must be >= 1");
    x -= std::floor(x);
    double sum = 0.0;
    for (long l = 0; l < n; ++l) {
        const double v = psi_fraction(x);
        if (v == kNegInf) return kNegInf;
        sum += v;
        x += x;
        if (x >= 1.0) x -= 1.0;
    }
    return sum;
}

double psi_n(const Rational& x, long n) {
    if (n < 1) throw std::invalid_argument("psi_n: n must be >= 1");
    const Rational r = mod1(x);
    std::int64_t p = r.num;
    const std::int64_t q = r.den;
    if (q > (std::int64_t{1} << 62)) throw std::overflow_error("psi_n: denominator too large");
    const double inv_q = 1.0 / static_cast<double>(q);
    double sum = 0.0;
    for (long l = 0; l < n; ++l) {
        if (p == 0) return kNegInf;
        sum += kLog2 + 2.0 * std::log(std::sin(kPi * (static_cast<double>(p) * inv_q)));
        p <<= 1;
        if (p >= q) p -= q;
    }
    return sum;
}

double psi_truncated(double x, int m) {
    if (m < 1) throw std::invalid_argument("psi_truncated: m must be >= 1");
    const double edge = std::ldexp(1.0, -(m + 1));
    if (x < edge || x > 1.0 - edge) return 0.0;
    return psi(x);
}

namespace {

// psi_n at the dyadic point p / 2^M via the exact doubling orbit
// p -> 2p mod 2^M. Never hits the singularity for odd p and n < M.
inline double psi_n_dyadic(std::uint64_t p, int M, int n) {
    const std::uint64_t mask = (std::uint64_t{1} << M) - 1;
    const double scale = std::ldexp(1.0, -M);
    double sum = 0.0;
    for (int l = 0; l < n; ++l) {
        sum += kLog2 + 2.0 * std::log(std::sin(kPi * (static_cast<double>(p) * scale)));
        p = (p << 1) & mask;
    }
    return sum;
}

struct GridMax {
    double value;
    std::uint64_t j;  // 1-based grid index
};

// Max of psi_n over the midpoints (2j-1) 2^-(n+1), j = 1..2^(n-1), i.e. the
// half-grid covering [0, 1/2]; psi_n on [1/2, 1] mirrors it.
GridMax midpoint_grid_max(int n, int threads) {
    if (n < 2) throw std::invalid_argument("midpoint grid scan: n must be >= 2");
    if (n > resource_cap(26)) throw std::invalid_argument("midpoint grid scan: n exceeds cap");
    const int M = n + 1;
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    auto [value, idx] = block_max(half, threads, [&](std::size_t j0) {
        return psi_n_dyadic(2 * static_cast<std::uint64_t>(j0) + 1, M, n);
    });
    return {value, static_cast<std::uint64_t>(idx) + 1};
}

}  // namespace

MidpointArgmax argmax_on_midpoints(int n, int threads) {
    const GridMax gm = midpoint_grid_max(n, threads);
    const std::int64_t den = std::int64_t{1} << (n + 1);
    const Rational x(static_cast<std::int64_t>(2 * gm.j - 1), den);
    return {x, gm.value, point_to_word(x, n)};
}

double max_gap_constant(int n, int threads) {
    const GridMax gm = midpoint_grid_max(n, threads);
    // psi_n(1/3) = n log(3/2): the orbit alternates between 1/3 and 2/3,
    // where psi takes the same value log(3/2).
    return gm.value - static_cast<double>(n) * kLogThreeHalves;
}

}  // namespace tmf
