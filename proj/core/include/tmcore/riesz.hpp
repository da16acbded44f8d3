#pragma once

#include <cstdint>
#include <vector>

#include "tmcore/rational.hpp"
#include "tmcore/words.hpp"

namespace tmf {

// Fourier coefficient table of the level-N approximant density
// P_N(x) = prod_{l<N} (1 - cos(2 pi 2^l x)). The polynomial is real and even,
// so only c_k for k >= 0 is stored; c_{-k} = c_k and the support lies in
// (-2^N, 2^N). Exact invariants: c_0 = 1, sum_k c_k = P_N(0) = 0 for N >= 1,
// and sum_k |c_k| <= 2^N (the shifted copies in the recursion overlap, so
// each level at most doubles the absolute sum).
struct TrigPolynomial {
    int level = 0;
    std::vector<double> coeffs;  // index k in [0, 2^level)

    double coeff(std::int64_t k) const {
        const std::uint64_t a = static_cast<std::uint64_t>(k < 0 ? -k : k);
        return a < coeffs.size() ? coeffs[a] : 0.0;
    }
    // P_N(x) = c_0 + 2 sum_{k>=1} c_k cos(2 pi k x)
    double evaluate(double x) const;
};

// Coefficients via the level recursion
//   c^{(l+1)}(k) = c^{(l)}(k) - (c^{(l)}(k - 2^l) + c^{(l)}(k + 2^l)) / 2.
// N is limited by a resource cap (default 22, TM_MAX_LEVEL overrides).
TrigPolynomial fourier_coeffs(int N);

// Exact-rational variant used as an oracle path; denominators are 2^N.
std::vector<Rational> fourier_coeffs_exact(int N);

struct CylinderMass {
    BinaryWord word;
    int level = 0;
    double mass = 0.0;
};

// nu_N(<w>) integrated in closed form from the coefficient table: the k = 0
// term contributes the interval length, each k > 0 pairs with -k into
// c_k (sin(2 pi k b) - sin(2 pi k a)) / (pi k). Frequencies are summed in
// ascending order through fixed-size blocks, so results do not depend on the
// worker count.
double cylinder_mass(const BinaryWord& w, const TrigPolynomial& poly, int threads = 0);
CylinderMass cylinder_mass(const BinaryWord& w, int N, int threads = 0);

// Masses of all 2^n cylinders of length n at level N, sharing one
// antiderivative grid pass.
std::vector<double> cylinder_masses(int n, const TrigPolynomial& poly, int threads = 0);

struct GibbsCheck {
    double mass = 0.0;
    double bound = 0.0;  // 2^-n sup_{<w>} exp(psi_n)
    bool pass = false;   // mass <= bound (1 + 1e-9)
};

// Upper Gibbs-type estimate nu_N(<w>) <= 2^-n sup_{<w>} exp(psi_n). The sup
// runs a golden-section maximization on each half of the cylinder (psi_n is
// concave there, with at most one singular endpoint) and takes the larger
// value.
GibbsCheck gibbs_upper_check(const BinaryWord& w, int N, int threads = 0);

// Diagnostic companion of the two-sided bound: mass / (2^-n inf exp(psi_n))
// with the inf sampled over admissible completions of w inside the
// run-length subshift for the given m. No pass/fail threshold is attached;
// the distortion constant is existence-only.
double gibbs_lower_ratio(const BinaryWord& w, int N, int m, int threads = 0);

struct LocalDimension {
    double value = 0.0;
    bool infinite = false;  // psi_n hit a singularity
};

// 1 - psi_n(x) / (n log 2); the finite-n local dimension estimate at x.
LocalDimension local_dimension_estimate(const Rational& x, long n);

// psi_n(x) / (n log 2).
double beta_estimate(const Rational& x, long n);
double beta_estimate(double x, long n);

// max over `samples` seeded-random y of |g(y/2) + g(y/2 + 1/2) - 1| for
// g(x) = (1 - cos 2 pi x)/2; exercises the normalization sum_{T x = y} g(x) = 1.
double g_identity_check(int samples);

}  // namespace tmf
