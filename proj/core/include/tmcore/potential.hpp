#pragma once

#include <limits>
#include <vector>

#include "tmcore/rational.hpp"
#include "tmcore/words.hpp"

namespace tmf {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLog2 = 0.69314718055994530942;          // log 2
inline constexpr double kLogThreeHalves = 0.40546510810816438198;  // log(3/2)
inline constexpr double kLogFourThirds = 0.28768207245178092744;   // log(4/3)

// Uniform bound on max psi_n - n log(3/2): pi + log(4/3) from the telescoping
// estimate, plus one log(3/2) of slack so the bound also covers n = 1.
inline constexpr double kBirkhoffGapBound = kPi + kLogFourThirds;
inline constexpr double kBirkhoffGapGlobal = kBirkhoffGapBound + kLogThreeHalves;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// psi(x) = log(1 - cos 2 pi x), evaluated as log 2 + 2 log sin(pi x); the
// 1 - cos form underflows quadratically near the singularities. Inputs are
// reduced mod 1. Exactly -inf at 0.
double psi(double x);
double psi(const Rational& x);

// psi'(x) = 2 pi sin(2 pi x)/(1 - cos 2 pi x) = 2 pi cot(pi x); poles at 0, 1.
double psi_prime(double x);

// Birkhoff sum psi_n(x) = sum_{l<n} psi(2^l x mod 1). Rational inputs track
// the doubling orbit exactly (2p mod q), so no drift accumulates even for
// hundreds of doublings; double inputs reduce mod 1 per step and are only
// trustworthy for n well below the 53-bit mantissa width.
double psi_n(double x, long n);
double psi_n(const Rational& x, long n);

// psi restricted to D(m) = [2^-(m+1), 1 - 2^-(m+1)], zero outside (boundary
// included).
double psi_truncated(double x, int m);

struct MidpointArgmax {
    Rational x;    // maximizing grid point in [0, 1/2]
    double value;  // psi_n there
    BinaryWord word;
};

// Scan psi_n over the cylinder-midpoint grid (2j-1) 2^-(n+1) restricted to
// [0, 1/2] and report the maximizer with the length-n word containing it.
// Ties resolve to the lowest x. 2 <= n <= 26 (cap overridable).
MidpointArgmax argmax_on_midpoints(int n, int threads = 0);

// max over the midpoint grid of psi_n(x) - psi_n(1/3); bounded by
// pi + log(4/3) ~ 3.429.
double max_gap_constant(int n, int threads = 0);

}  // namespace tmf
