#include "tmcore/words.hpp"

#include <cmath>
#include <stdexcept>

namespace tmf {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

BinaryWord::BinaryWord(std::vector<std::uint8_t> b) : bits(std::move(b)) {
    require(!bits.empty(), "BinaryWord: length must be >= 1");
    for (auto v : bits) require(v <= 1, "BinaryWord: symbols must be 0 or 1");
}

BinaryWord BinaryWord::parse(std::string_view s) {
    require(!s.empty(), "BinaryWord: empty string");
    std::vector<std::uint8_t> b;
    b.reserve(s.size());
    for (char c : s) {
        require(c == '0' || c == '1', "BinaryWord: characters must be 0 or 1");
        b.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinaryWord(std::move(b));
}

BinaryWord BinaryWord::from_value(std::uint64_t v, int n) {
    require(n >= 1 && n <= 63, "BinaryWord: length out of range");
    require(v < (std::uint64_t{1} << n), "BinaryWord: value does not fit length");
    std::vector<std::uint8_t> b(n);
    for (int i = 0; i < n; ++i) b[i] = static_cast<std::uint8_t>((v >> (n - 1 - i)) & 1u);
    return BinaryWord(std::move(b));
}

BinaryWord BinaryWord::alternating(int n) {
    require(n >= 1, "BinaryWord: length must be >= 1");
    std::vector<std::uint8_t> b(n);
    for (int i = 0; i < n; ++i) b[i] = static_cast<std::uint8_t>(i & 1);
    return BinaryWord(std::move(b));
}

std::uint64_t BinaryWord::value() const {
    std::uint64_t v = 0;
    for (auto bit : bits) v = (v << 1) | bit;
    return v;
}

std::string BinaryWord::str() const {
    std::string s;
    s.reserve(bits.size());
    for (auto bit : bits) s.push_back(static_cast<char>('0' + bit));
    return s;
}

Interval word_interval(const BinaryWord& w) {
    const int n = w.size();
    require(n >= 1 && n <= 62, "word_interval: length out of range");
    const std::int64_t den = std::int64_t{1} << n;
    const std::int64_t v = static_cast<std::int64_t>(w.value());
    return {Rational(v, den), Rational(v + 1, den)};
}

Rational word_midpoint(const BinaryWord& w) {
    const int n = w.size();
    require(n >= 1 && n <= 61, "word_midpoint: length out of range");
    const std::int64_t den = std::int64_t{1} << (n + 1);
    return Rational(2 * static_cast<std::int64_t>(w.value()) + 1, den);
}

BinaryWord point_to_word(const Rational& x, int n) {
    require(n >= 1, "point_to_word: n must be >= 1");
    require(x.num >= 0 && x.num < x.den, "point_to_word: x must lie in [0, 1)");
    std::vector<std::uint8_t> b(n);
    std::int64_t p = x.num;
    const std::int64_t q = x.den;
    for (int i = 0; i < n; ++i) {
        p <<= 1;
        if (p >= q) {
            b[i] = 1;
            p -= q;
        } else {
            b[i] = 0;
        }
    }
    return BinaryWord(std::move(b));
}

double rho2(const Rational& xr, const Rational& yr) {
    require(xr.num >= 0 && xr.num < xr.den && yr.num >= 0 && yr.num < yr.den,
            "rho2: arguments must lie in [0, 1)");
    if (xr.is_dyadic() || yr.is_dyadic())
        throw std::domain_error("rho2: undefined at dyadic points");
    if (xr == yr) return 0.0;
    std::int64_t px = xr.num, py = yr.num;
    const std::int64_t qx = xr.den, qy = yr.den;
    int k = 0;
    // Digits diverge after at most ~log2(qx*qy) steps since x != y.
    for (;;) {
        px <<= 1;
        py <<= 1;
        const int dx = px >= qx ? (px -= qx, 1) : 0;
        const int dy = py >= qy ? (py -= qy, 1) : 0;
        if (dx != dy) break;
        ++k;
    }
    return std::ldexp(1.0, -k);
}

bool is_admissible(const BinaryWord& w, int m) {
    require(m >= 1, "is_admissible: m must be >= 1");
    int run = 1;
    for (std::size_t i = 1; i < w.bits.size(); ++i) {
        run = (w.bits[i] == w.bits[i - 1]) ? run + 1 : 1;
        if (run > m) return false;
    }
    return true;
}

namespace {

std::uint64_t enumerate_impl(int n, std::optional<int> m,
                             const std::function<void(const BinaryWord&)>& visit) {
    require(n >= 1 && n <= 62, "enumerate_words: n out of range");
    if (m) require(*m >= 1, "enumerate_words: m must be >= 1");
    const int run_cap = m ? *m : n;
    BinaryWord w;
    w.bits.assign(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    // DFS over (position, current run length); symbol 0 before 1 keeps the
    // stream lexicographic.
    auto dfs = [&](auto&& self, int pos, int run) -> void {
        if (pos == n) {
            ++count;
            if (visit) visit(w);
            return;
        }
        for (std::uint8_t sym = 0; sym <= 1; ++sym) {
            const int next_run = (pos > 0 && w.bits[pos - 1] == sym) ? run + 1 : 1;
            if (next_run > run_cap) continue;
            w.bits[pos] = sym;
            self(self, pos + 1, next_run);
        }
    };
    dfs(dfs, 0, 0);
    return count;
}

}  // namespace

std::uint64_t enumerate_words(int n, std::optional<int> m,
                              const std::function<void(const BinaryWord&)>& visit) {
    return enumerate_impl(n, m, visit);
}

std::vector<BinaryWord> enumerate_words(int n, std::optional<int> m) {
    std::vector<BinaryWord> out;
    enumerate_impl(n, m, [&](const BinaryWord& w) { out.push_back(w); });
    return out;
}

std::uint64_t count_words(int n, std::optional<int> m) { return enumerate_impl(n, m, nullptr); }

BinaryWord collapse_h(BinaryWord w, int m) {
    require(m >= 1, "collapse_h: m must be >= 1");
    require(w.size() > m, "collapse_h: word length must exceed m");
    const int n = w.size();
    for (;;) {
        int run = 1;
        int gamma = -1;  // first position (1-based) where a symbol repeats m+1 times
        for (int i = 1; i < n; ++i) {
            run = (w.bits[i] == w.bits[i - 1]) ? run + 1 : 1;
            if (run > m) {
                gamma = i;
                break;
            }
        }
        if (gamma < 0) return w;
        for (int i = gamma; i < n; ++i) w.bits[i] ^= 1u;
    }
}

int flip_site_count(const BinaryWord& w, int m) {
    require(m >= 1, "flip_site_count: m must be >= 1");
    const int n = w.size();
    int i = 0;
    for (int g = m; g < n; ++g) {
        bool constant = true;
        for (int k = g - m; k < g - 1 && constant; ++k) constant = (w.bits[k] == w.bits[k + 1]);
        if (constant) ++i;
    }
    return i;
}

std::uint64_t preimage_count(const BinaryWord& target, int m) {
    const int n = target.size();
    require(n > m && n <= 20, "preimage_count: need m < n <= 20");
    if (!is_admissible(target, m))
        throw std::invalid_argument("preimage_count: target word is not admissible");
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < total; ++v) {
        if (collapse_h(BinaryWord::from_value(v, n), m) == target) ++count;
    }
    return count;
}

}  // namespace tmf
