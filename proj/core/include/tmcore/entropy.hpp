#pragma once

#include <cstddef>
#include <vector>

#include "tmcore/quad.hpp"
#include "tmcore/rational.hpp"

namespace tmf {

// Memoized autocorrelation coefficients of the +/-1 Thue-Morse sequence.
// eta(0) = 1, eta(1) = -1/3, and the dyadic renormalization
//   eta(2j) = eta(j),   eta(2j+1) = -(eta(j) + eta(j+1)) / 2.
// Denominators stay of the form 2^a 3^b, comfortably inside int64 for every
// index this library touches. The table is filled bottom-up, single-threaded.
class AutocorrelationTable {
  public:
    explicit AutocorrelationTable(std::size_t max_index);

    const Rational& eta(std::size_t j) const;
    std::size_t size() const { return values_.size(); }

  private:
    std::vector<Rational> values_;
};

// Convenience accessor over a shared table grown on demand.
Rational eta(std::size_t j);

// Finite-size estimate (1/(2^L - j)) sum_{k=1}^{2^L-j} v_k v_{k+j} with
// v_k = (-1)^popcount(k-1), the +1-leading Thue-Morse sequence. This is the
// ground-truth oracle the recursion is validated against.
double eta_empirical(std::size_t j, int L, int threads = 0);

struct EntropyResult {
    Quad h;                 // metric entropy 2 log 2 + 2 S
    Quad series_sum;        // S = sum_{j>=1} eta(j)/j
    int digits_validated;   // agreement between the two schemes
    Quad scheme_direct;     // S from partial sums + tail averaging
    Quad scheme_resummed;   // S from the iterated even/odd resummation
    std::string h_string(int digits) const { return h.str(digits); }
};

// S is computed by two independent routes that must agree to
// `precision_target` digits (<= 14):
//  (a) exact-rational partial sums accumulated to dyadic checkpoints 2^k,
//      with the oscillating O(1/J) tail removed by repeated weighted
//      averaging of the checkpoint sums (Richardson weights, ratio 2);
//  (b) the even/odd resummation of the renormalization, iterated three
//      times: each pass maps coefficients c(k) to c(2k) - (c(2k-1)+c(2k+1))/2,
//      gaining two orders of decay, ending at weights that fall off like
//      k^-7.
// Throws if the schemes disagree at the requested precision.
EntropyResult entropy_series(int precision_target);

// D_1 = h / log 2.
double information_dimension(const EntropyResult& r);
double information_dimension();

// 1 - log2((1 + sqrt(17))/4) ~ 0.6427.
double energy_exponent();

}  // namespace tmf
