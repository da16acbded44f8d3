#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tmcore/words.hpp"

namespace tmf {

// Sampled pressure approximant t -> p(t). kind_m = 0 for the full shift,
// m >= 1 for the run-length-restricted subshift.
struct PressureCurve {
    int n = 0;
    int kind_m = 0;
    std::vector<double> t;
    std::vector<double> p;
};

enum class SpectrumKind { birkhoff, dimension };

struct SpectrumCurve {
    SpectrumKind kind = SpectrumKind::birkhoff;
    int n = 0;
    std::vector<double> alpha;
    std::vector<double> value;
};

struct LegendrePoint {
    double alpha = 0.0;
    double value = 0.0;     // max over the grid of t*alpha - p(t)
    bool unbounded = false;  // max sits on the right grid edge and still climbs
};

// Centered Birkhoff values s_j = psi_n((2j-1) 2^-n) - log 2, j = 1..2^{n-2}.
// One evaluation per hump of psi_n on [0, 1/2]; computed once and shared
// across every t.
std::vector<double> birkhoff_midpoint_table(int n, int threads = 0);

// p^[n](t) = (n-2)^-1 log sum_j exp(t s_j). Exactly log 2 at t = 0 and,
// by the normalization built into s_j, log 2 at t = 1 as well. The full
// pressure is infinite for t < 0, which is rejected here.
double pressure_approx(int n, double t, int threads = 0);
double pressure_approx(int n, double t, std::span<const double> table, int threads = 0);
PressureCurve pressure_curve(int n, std::span<const double> t_grid, int threads = 0);

// Restricted analogue over the admissible words of length n: the sup of
// psi_n over <w> within the subshift is approximated at the representative
// point w followed by the alternating tail (starting opposite to the last
// symbol, so no forbidden run crosses the junction). Finite for every real
// t, negative t included.
double restricted_pressure(int m, int n, double t, int threads = 0);
PressureCurve restricted_pressure_curve(int m, int n, std::span<const double> t_grid,
                                        int threads = 0);

// psi_n at the representative points of all admissible words, in
// lexicographic word order.
std::vector<double> restricted_rep_table(int m, int n, int threads = 0);

// Legendre transform over the sampled curve: p*(a) = max_t (t a - p(t)),
// with an explicit edge flag instead of a sentinel where the finite grid
// cannot witness the (infinite) sup.
std::vector<LegendrePoint> legendre(const PressureCurve& curve, std::span<const double> alphas);

// Default t grid for the spectra: [0, 40] step 0.1.
std::vector<double> default_spectrum_t_grid();

// b(alpha) = max(-p*(alpha)/log 2, 0), clamped to [0, 1]; 0 where the
// transform is edge-flagged.
SpectrumCurve birkhoff_spectrum(int n, std::span<const double> alphas, int threads = 0);
SpectrumCurve birkhoff_spectrum(const PressureCurve& curve, std::span<const double> alphas);

// f(alpha) = b(log 2 (1 - alpha)); evaluated through the identical pipeline
// at the transformed grid, so the reparametrization is bit-exact.
SpectrumCurve dimension_spectrum(int n, std::span<const double> alphas, int threads = 0);
SpectrumCurve dimension_spectrum(const PressureCurve& curve, std::span<const double> alphas);

// Analytic right derivative of p^[n] at 0: mean of s_j divided by (n-2).
double pressure_slope_at_zero(int n, int threads = 0);

// Cross-check path for p^[n]: the cylinder-sup form
// (1/n) log sum_{w in Sigma^n} sup_{<w>} exp(t psi_n), with each sup from a
// golden-section pass over the (concave) restriction to the cylinder.
// Exponential in n; capped at n <= 16.
std::vector<double> cylinder_sup_table(int n, int threads = 0);
double cylinder_sup_pressure(int n, double t, std::span<const double> sups, int threads = 0);
double cylinder_sup_pressure(int n, double t, int threads = 0);

}  // namespace tmf
