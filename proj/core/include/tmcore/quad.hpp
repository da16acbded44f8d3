#pragma once

#include <quadmath.h>

#include <cstdint>
#include <string>

#include "tmcore/rational.hpp"

namespace tmf {

// Thin value wrapper around __float128 (~33 significant decimal digits);
// just enough surface for the entropy series work.
struct Quad {
    __float128 v = 0;

    constexpr Quad() = default;
    constexpr Quad(__float128 x) : v(x) {}  // NOLINT(google-explicit-constructor)
    constexpr Quad(double x) : v(x) {}      // NOLINT(google-explicit-constructor)
    constexpr Quad(long long x) : v(x) {}   // NOLINT(google-explicit-constructor)
    explicit Quad(const Rational& r) : v(__float128(r.num) / __float128(r.den)) {}

    double to_double() const { return static_cast<double>(v); }

    std::string str(int digits = 33) const {
        char buf[128];
        quadmath_snprintf(buf, sizeof buf, "%.*Qg", digits, v);
        return buf;
    }

    friend Quad operator+(Quad a, Quad b) { return {a.v + b.v}; }
    friend Quad operator-(Quad a, Quad b) { return {a.v - b.v}; }
    friend Quad operator*(Quad a, Quad b) { return {a.v * b.v}; }
    friend Quad operator/(Quad a, Quad b) { return {a.v / b.v}; }
    Quad operator-() const { return {-v}; }
    Quad& operator+=(Quad o) {
        v += o.v;
        return *this;
    }
    Quad& operator-=(Quad o) {
        v -= o.v;
        return *this;
    }
    friend bool operator<(Quad a, Quad b) { return a.v < b.v; }
    friend bool operator>(Quad a, Quad b) { return a.v > b.v; }
    friend bool operator==(Quad a, Quad b) { return a.v == b.v; }
};

inline Quad quad_abs(Quad a) { return {a.v < 0 ? -a.v : a.v}; }
inline Quad quad_log(Quad a) { return {logq(a.v)}; }
inline Quad quad_log2() { return {logq(__float128(2))}; }

}  // namespace tmf
