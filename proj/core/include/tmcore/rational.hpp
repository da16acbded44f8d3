#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tmf {

// Exact rational p/q, q > 0, always reduced. Covers every exact value the
// library tracks: dyadic interval endpoints, doubling orbits 2^l x mod 1,
// and the autocorrelation coefficients (denominators of the form 2^a 3^b).
// Intermediate products use __int128, so any reduced value with |p|, q below
// 2^62 is safe through the arithmetic here.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }
    constexpr Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)

    void reduce() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool is_integer() const { return den == 1; }
    bool is_dyadic() const { return (den & (den - 1)) == 0; }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    static Rational parse(std::string_view s);

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num) * b.num, i128(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("Rational: division by zero");
        return from128(i128(a.num) * b.den, i128(a.den) * b.num);
    }
    Rational operator-() const {
        Rational r;
        r.num = -num;
        r.den = den;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num) * b.den < i128(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  private:
    using i128 = __int128;

    static Rational from128(i128 n, i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        if (r.den == 0) throw std::invalid_argument("Rational: zero denominator");
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
};

// x - floor(x), exact.
inline Rational mod1(const Rational& x) {
    std::int64_t r = x.num % x.den;
    if (r < 0) r += x.den;
    Rational out;
    out.num = r;
    out.den = x.den;
    out.reduce();
    return out;
}

inline Rational Rational_parse_impl(std::string_view s) {
    const auto slash = s.find('/');
    auto to_i64 = [](std::string_view t) {
        if (t.empty()) throw std::invalid_argument("Rational: empty field");
        std::size_t pos = 0;
        const long long v = std::stoll(std::string(t), &pos);
        if (pos != t.size()) throw std::invalid_argument("Rational: trailing characters");
        return static_cast<std::int64_t>(v);
    };
    if (slash == std::string_view::npos) return Rational(to_i64(s), 1);
    return Rational(to_i64(s.substr(0, slash)), to_i64(s.substr(slash + 1)));
}

inline Rational Rational::parse(std::string_view s) { return Rational_parse_impl(s); }

}  // namespace tmf
