#include "tmcore/pressure.hpp"

#include <cmath>
#include <stdexcept>

#include "tmcore/config.hpp"
#include "tmcore/optimize.hpp"
#include "tmcore/parallel.hpp"
#include "tmcore/potential.hpp"

namespace tmf {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Deterministic log-sum-exp: max first, then a block-ordered sum.
double log_sum_exp(std::span<const double> values, double t, int threads) {
    double peak = -std::numeric_limits<double>::infinity();
    for (double s : values) peak = std::max(peak, t * s);
    const double sum = block_sum(values.size(), threads,
                                 [&](std::size_t i) { return std::exp(t * values[i] - peak); });
    return peak + std::log(sum);
}

void check_grid(std::span<const double> grid, bool nonnegative) {
    require(!grid.empty(), "pressure grid must be non-empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (nonnegative && grid[i] < 0.0)
            throw std::domain_error("full pressure is infinite for t < 0");
        if (i > 0 && grid[i] <= grid[i - 1])
            throw std::invalid_argument("pressure grid must be strictly increasing");
    }
}

}  // namespace

std::vector<double> birkhoff_midpoint_table(int n, int threads) {
    require(n >= 3, "birkhoff_midpoint_table: n must be >= 3");
    require(n <= resource_cap(26), "birkhoff_midpoint_table: n exceeds cap");
    const std::size_t count = std::size_t{1} << (n - 2);
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    const double scale = std::ldexp(1.0, -n);
    std::vector<double> table(count);
    for_each_block(count, threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
        for (std::size_t j0 = lo; j0 < hi; ++j0) {
            std::uint64_t p = 2 * static_cast<std::uint64_t>(j0) + 1;
            double sum = -kLog2;  // the 1/2 normalization factor
            for (int l = 0; l < n; ++l) {
                sum += kLog2 + 2.0 * std::log(std::sin(kPi * (static_cast<double>(p) * scale)));
                p = (p << 1) & mask;
            }
            table[j0] = sum;
        }
    });
    return table;
}

double pressure_approx(int n, double t, std::span<const double> table, int threads) {
    if (t < 0.0) throw std::domain_error("pressure_approx: infinite for t < 0");
    return log_sum_exp(table, t, threads) / static_cast<double>(n - 2);
}

double pressure_approx(int n, double t, int threads) {
    const auto table = birkhoff_midpoint_table(n, threads);
    return pressure_approx(n, t, table, threads);
}

PressureCurve pressure_curve(int n, std::span<const double> t_grid, int threads) {
    check_grid(t_grid, true);
    const auto table = birkhoff_midpoint_table(n, threads);
    PressureCurve curve;
    curve.n = n;
    curve.kind_m = 0;
    curve.t.assign(t_grid.begin(), t_grid.end());
    curve.p.resize(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i)
        curve.p[i] = pressure_approx(n, t_grid[i], table, threads);
    return curve;
}

std::vector<double> restricted_rep_table(int m, int n, int threads) {
    require(m >= 1 && m < n, "restricted pressure: need 1 <= m < n");
    require(n <= resource_cap(24), "restricted pressure: n exceeds cap");
    // Pack each admissible word as (value, last symbol); orbits of the
    // representative points run over denominators 3 * 2^n.
    std::vector<std::uint64_t> packed;
    enumerate_words(n, m, [&](const BinaryWord& w) {
        packed.push_back((w.value() << 1) | w.bits[static_cast<std::size_t>(n) - 1]);
    });
    const std::int64_t q = std::int64_t{3} << n;
    std::vector<double> table(packed.size());
    for_each_block(packed.size(), threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
        for (std::size_t i = lo; i < hi; ++i) {
            const std::int64_t v = static_cast<std::int64_t>(packed[i] >> 1);
            const std::int64_t last = static_cast<std::int64_t>(packed[i] & 1);
            // Alternating tail 0.(1-a)(a)(1-a)... contributes 2/3 after a
            // trailing 0 and 1/3 after a trailing 1.
            std::int64_t p = 3 * v + (last == 0 ? 2 : 1);
            double sum = 0.0;
            for (int l = 0; l < n; ++l) {
                sum += kLog2 +
                       2.0 * std::log(std::sin(kPi * (static_cast<double>(p) / static_cast<double>(q))));
                p <<= 1;
                if (p >= q) p -= q;
            }
            table[i] = sum;
        }
    });
    return table;
}

double restricted_pressure(int m, int n, double t, int threads) {
    const auto table = restricted_rep_table(m, n, threads);
    return log_sum_exp(table, t, threads) / static_cast<double>(n);
}

PressureCurve restricted_pressure_curve(int m, int n, std::span<const double> t_grid,
                                        int threads) {
    check_grid(t_grid, false);
    const auto table = restricted_rep_table(m, n, threads);
    PressureCurve curve;
    curve.n = n;
    curve.kind_m = m;
    curve.t.assign(t_grid.begin(), t_grid.end());
    curve.p.resize(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i)
        curve.p[i] = log_sum_exp(table, t_grid[i], threads) / static_cast<double>(n);
    return curve;
}

std::vector<LegendrePoint> legendre(const PressureCurve& curve,
                                    std::span<const double> alphas) {
    require(curve.t.size() >= 2, "legendre: curve needs at least two samples");
    std::vector<LegendrePoint> out;
    out.reserve(alphas.size());
    for (double a : alphas) {
        double best = -std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
        for (std::size_t i = 0; i < curve.t.size(); ++i) {
            const double g = curve.t[i] * a - curve.p[i];
            if (g > best) {
                best = g;
                arg = i;
            }
        }
        const std::size_t last = curve.t.size() - 1;
        const bool edge = arg == last &&
                          curve.t[last] * a - curve.p[last] >
                              curve.t[last - 1] * a - curve.p[last - 1];
        out.push_back({a, best, edge});
    }
    return out;
}

std::vector<double> default_spectrum_t_grid() {
    std::vector<double> grid;
    grid.reserve(401);
    for (int i = 0; i <= 400; ++i) grid.push_back(static_cast<double>(i) * 0.1);
    return grid;
}

SpectrumCurve birkhoff_spectrum(const PressureCurve& curve, std::span<const double> alphas) {
    SpectrumCurve out;
    out.kind = SpectrumKind::birkhoff;
    out.n = curve.n;
    out.alpha.assign(alphas.begin(), alphas.end());
    out.value.reserve(alphas.size());
    for (const LegendrePoint& pt : legendre(curve, alphas)) {
        double b = pt.unbounded ? 0.0 : std::max(-pt.value / kLog2, 0.0);
        b = std::min(b, 1.0);
        out.value.push_back(b);
    }
    return out;
}

SpectrumCurve birkhoff_spectrum(int n, std::span<const double> alphas, int threads) {
    const auto grid = default_spectrum_t_grid();
    return birkhoff_spectrum(pressure_curve(n, grid, threads), alphas);
}

SpectrumCurve dimension_spectrum(const PressureCurve& curve, std::span<const double> alphas) {
    std::vector<double> transformed(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) transformed[i] = kLog2 * (1.0 - alphas[i]);
    SpectrumCurve b = birkhoff_spectrum(curve, transformed);
    SpectrumCurve out;
    out.kind = SpectrumKind::dimension;
    out.n = curve.n;
    out.alpha.assign(alphas.begin(), alphas.end());
    out.value = std::move(b.value);
    return out;
}

SpectrumCurve dimension_spectrum(int n, std::span<const double> alphas, int threads) {
    const auto grid = default_spectrum_t_grid();
    return dimension_spectrum(pressure_curve(n, grid, threads), alphas);
}

double pressure_slope_at_zero(int n, int threads) {
    require(n >= 4, "pressure_slope_at_zero: n must be >= 4");
    const auto table = birkhoff_midpoint_table(n, threads);
    const double mean =
        block_sum(table.size(), threads, [&](std::size_t i) { return table[i]; }) /
        static_cast<double>(table.size());
    return mean / static_cast<double>(n - 2);
}

std::vector<double> cylinder_sup_table(int n, int threads) {
    require(n >= 2 && n <= 16, "cylinder_sup_pressure: need 2 <= n <= 16");
    const std::size_t cells = std::size_t{1} << n;
    const double width = std::ldexp(1.0, -n);
    std::vector<double> sups(cells);
    for_each_block(cells, threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
        for (std::size_t v = lo; v < hi; ++v) {
            const double a = static_cast<double>(v) * width;
            // psi_n is concave on each length-(n-1) cylinder, hence on <w>.
            sups[v] = golden_section_max([n](double x) { return psi_n(x, n); }, a, a + width,
                                         1e-12);
        }
    });
    return sups;
}

double cylinder_sup_pressure(int n, double t, std::span<const double> sups, int threads) {
    if (t < 0.0) throw std::domain_error("cylinder_sup_pressure: infinite for t < 0");
    return log_sum_exp(sups, t, threads) / static_cast<double>(n);
}

double cylinder_sup_pressure(int n, double t, int threads) {
    const auto sups = cylinder_sup_table(n, threads);
    return cylinder_sup_pressure(n, t, sups, threads);
}

}  // namespace tmf
