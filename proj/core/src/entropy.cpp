#include "tmcore/entropy.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "tmcore/parallel.hpp"

namespace tmf {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

AutocorrelationTable::AutocorrelationTable(std::size_t max_index) {
    values_.resize(max_index + 1);
    values_[0] = Rational(1);
    if (max_index >= 1) values_[1] = Rational(-1, 3);  // fixed point of x = -(1 + x)/2
    for (std::size_t j = 2; j <= max_index; ++j) {
        if ((j & 1) == 0) {
            values_[j] = values_[j / 2];
        } else {
            const std::size_t i = j / 2;
            values_[j] = -(values_[i] + values_[i + 1]) / Rational(2);
        }
    }
}

const Rational& AutocorrelationTable::eta(std::size_t j) const {
    if (j >= values_.size()) throw std::out_of_range("AutocorrelationTable: index beyond table");
    return values_[j];
}

Rational eta(std::size_t j) {
    static std::mutex mu;
    static std::shared_ptr<const AutocorrelationTable> table;
    std::lock_guard<std::mutex> lock(mu);
    if (!table || j >= table->size()) {
        std::size_t cap = 1024;
        while (cap <= j) cap <<= 1;
        table = std::make_shared<const AutocorrelationTable>(cap);
    }
    return table->eta(j);
}

double eta_empirical(std::size_t j, int L, int threads) {
    require(L >= 1 && L <= 28, "eta_empirical: need 1 <= L <= 28");
    const std::size_t len = std::size_t{1} << L;
    if (j >= len) throw std::invalid_argument("eta_empirical: lag must be below 2^L");
    // v_k = (-1)^popcount(k-1); correlate v_k v_{k+j} over k = 1 .. 2^L - j.
    const std::size_t count = len - j;
    const double sum = block_sum(count, threads, [&](std::size_t i) {
        const std::uint64_t k0 = i;          // k - 1
        const std::uint64_t k1 = i + j;      // k + j - 1
        const int parity = (__builtin_popcountll(k0) + __builtin_popcountll(k1)) & 1;
        return parity ? -1.0 : 1.0;
    });
    return sum / static_cast<double>(count);
}

namespace {

// ---- scheme (b): iterated even/odd resummation -------------------------
//
// With S = sum_{j>=0} eta(j) c(j), the renormalization identities turn the
// weight sequence into c'(k) = c(2k) - (c(2k-1) + c(2k+1)) / 2 (indices < 0
// read as 0), a halved-scale second difference. Starting from c0(j) = 1/j
// this yields after one pass the closed form
//   c1(0) = -1/2,   c1(k) = -1 / (2k (4k^2 - 1)),
// and each further pass gains two orders of decay: c2 ~ k^-5, c3 ~ k^-7.

Quad c1_weight(long long k) {
    if (k < 0) return Quad(0.0);
    if (k == 0) return Quad(-0.5);
    const Quad kk(static_cast<double>(k));
    return Quad(-1.0) / (Quad(2.0) * kk * (Quad(4.0) * kk * kk - Quad(1.0)));
}

Quad c2_weight(long long k) {
    if (k < 0) return Quad(0.0);
    return c1_weight(2 * k) - (c1_weight(2 * k - 1) + c1_weight(2 * k + 1)) / Quad(2.0);
}

Quad c3_weight(long long k) {
    if (k < 0) return Quad(0.0);
    return c2_weight(2 * k) - (c2_weight(2 * k - 1) + c2_weight(2 * k + 1)) / Quad(2.0);
}

Quad resummed_sum(const AutocorrelationTable& table, std::size_t cap) {
    Quad s(0.0);
    for (std::size_t k = 0; k <= cap; ++k)
        s += Quad(table.eta(k)) * c3_weight(static_cast<long long>(k));
    return s;
}

// ---- scheme (a): partial sums + repeated averaging ----------------------
//
// Partial sums at dyadic checkpoints 2^k carry an oscillating tail whose
// dyadic-scale recursion produces modes (a + b k) 2^-k, (c + d k) 4^-k, ...
// Eliminating each ratio twice (Richardson weights 2, 2, 4, 4, ...) absorbs
// the polynomial factors along with the pure modes.

struct DirectParams {
    int k_lo = 10;
    int k_hi = 20;
    int depth = 8;
};

Quad direct_sum(const AutocorrelationTable& table, const DirectParams& par) {
    std::vector<Quad> checkpoints;
    Quad acc(0.0);
    std::size_t next_checkpoint = std::size_t{1} << par.k_lo;
    const std::size_t last = std::size_t{1} << par.k_hi;
    for (std::size_t j = 1; j <= last; ++j) {
        acc += Quad(table.eta(j)) / Quad(static_cast<double>(j));
        if (j == next_checkpoint) {
            checkpoints.push_back(acc);
            next_checkpoint <<= 1;
        }
    }
    std::vector<Quad> row = std::move(checkpoints);
    for (int r = 0; r < par.depth && row.size() >= 2; ++r) {
        const Quad rho(std::ldexp(1.0, 1 + r / 2));  // 2, 2, 4, 4, 8, 8, ...
        std::vector<Quad> next(row.size() - 1);
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            next[i] = (rho * row[i + 1] - row[i]) / (rho - Quad(1.0));
        row = std::move(next);
    }
    return row.back();
}

int agreement_digits(Quad a, Quad b) {
    const Quad diff = quad_abs(a - b);
    if (diff == Quad(0.0)) return 33;
    const Quad scale = quad_abs(a);
    const double digits = static_cast<double>((quad_log(scale / diff) / quad_log(Quad(10.0))).v);
    return std::max(0, static_cast<int>(std::floor(digits)));
}

}  // namespace

EntropyResult entropy_series(int precision_target) {
    require(precision_target >= 1 && precision_target <= 14,
            "entropy_series: precision target must be in [1, 14]");
    const DirectParams par;
    const std::size_t table_size = std::size_t{1} << par.k_hi;
    const AutocorrelationTable table(table_size + 1);

    const Quad s_direct = direct_sum(table, par);
    const Quad s_resummed = resummed_sum(table, 1 << 15);

    const Quad two(2.0);
    const Quad log2q = quad_log2();
    const Quad h_direct = two * log2q + two * s_direct;
    const Quad h_resummed = two * log2q + two * s_resummed;
    const int digits = agreement_digits(h_resummed, h_direct);
    if (digits < precision_target) {
        std::ostringstream msg;
        msg << "entropy_series: summation schemes agree to only " << digits
            << " digits (direct h = " << h_direct.str(20)
            << ", resummed h = " << h_resummed.str(20) << ")";
        throw std::runtime_error(msg.str());
    }
    return {h_resummed, s_resummed, digits, s_direct, s_resummed};
}

double information_dimension(const EntropyResult& r) {
    return (r.h / quad_log2()).to_double();
}

double information_dimension() { return information_dimension(entropy_series(12)); }

double energy_exponent() {
    const double kappa = (1.0 + std::sqrt(17.0)) / 4.0;
    return 1.0 - std::log2(kappa);
}

}  // namespace tmf
