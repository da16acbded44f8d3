#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmcore/rational.hpp"

namespace tmf {

// Finite 0/1 word addressing the dyadic cylinder [v 2^-n, (v+1) 2^-n], where
// v is the word read as a big-endian binary integer. Serialized as an ASCII
// 0/1 string.
struct BinaryWord {
    std::vector<std::uint8_t> bits;

    BinaryWord() = default;
    explicit BinaryWord(std::vector<std::uint8_t> b);
    static BinaryWord parse(std::string_view s);
    static BinaryWord from_value(std::uint64_t v, int n);
    static BinaryWord alternating(int n);  // 0101...

    int size() const { return static_cast<int>(bits.size()); }
    std::uint64_t value() const;  // big-endian integer
    std::string str() const;

    friend bool operator==(const BinaryWord& a, const BinaryWord& b) { return a.bits == b.bits; }
    friend bool operator!=(const BinaryWord& a, const BinaryWord& b) { return !(a == b); }
};

struct Interval {
    Rational low;
    Rational high;
};

// Cylinder interval of a word; high - low = 2^-n exactly.
Interval word_interval(const BinaryWord& w);
Rational word_midpoint(const BinaryWord& w);

// First n binary digits of x in [0, 1). Dyadic points take the terminating
// (trailing-zeros) expansion; x = 1 is rejected.
BinaryWord point_to_word(const Rational& x, int n);

// Shift-space metric: 2^-k with k the longest common binary prefix length.
// Undefined (throws) for dyadic points, which have two expansions.
double rho2(const Rational& x, const Rational& y);

// True iff w contains no run of a single symbol of length m+1.
bool is_admissible(const BinaryWord& w, int m);

// Visit every word of length n (all of them when m is absent, only the
// run-length-admissible ones otherwise) in lexicographic order. The DFS
// carries (last symbol, run length), so admissible enumeration is
// output-linear rather than filter-after-generate. Returns the count.
std::uint64_t enumerate_words(int n, std::optional<int> m,
                              const std::function<void(const BinaryWord&)>& visit);
std::vector<BinaryWord> enumerate_words(int n, std::optional<int> m);
std::uint64_t count_words(int n, std::optional<int> m);

// Collapse map h: repeatedly locate the first position where a symbol has
// appeared m+1 times in a row and flip the whole suffix from that position,
// until the word is admissible. Fixed on admissible words.
BinaryWord collapse_h(BinaryWord w, int m);

// Number i of positions g in [m+1, n] preceded by m equal symbols
// w[g-m..g-1]; the preimage cardinality of an admissible word under h is 2^i.
int flip_site_count(const BinaryWord& w, int m);

// card{ w in Sigma^n : h(w) = target }, by brute force over Sigma^n.
// Intended for n <= 20; throws if target is not admissible.
std::uint64_t preimage_count(const BinaryWord& target, int m);

}  // namespace tmf
