#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <thread>
#include <utility>
#include <vector>

#include "tmcore/config.hpp"

namespace tmf {

// All reductions below partition [0, count) into blocks of a FIXED size, so
// the block structure (and hence every floating-point combine order) does not
// depend on the worker count. Block results are combined in ascending block
// index on the calling thread. Two runs therefore produce identical bits for
// any --threads setting.
inline constexpr std::size_t kReduceBlock = 16384;

template <class Fn>
void for_each_block(std::size_t count, int threads, Fn&& fn) {
    if (count == 0) return;
    const std::size_t nblocks = (count + kReduceBlock - 1) / kReduceBlock;
    const int workers = std::min<std::size_t>(resolve_threads(threads), nblocks);
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t b = next.fetch_add(1); b < nblocks; b = next.fetch_add(1)) {
            const std::size_t lo = b * kReduceBlock;
            const std::size_t hi = std::min(count, lo + kReduceBlock);
            fn(lo, hi, b);
        }
    };
    if (workers <= 1) {
        run();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

// Deterministic sum of term(i) for i in [0, count).
template <class Term>
double block_sum(std::size_t count, int threads, Term&& term) {
    if (count == 0) return 0.0;
    const std::size_t nblocks = (count + kReduceBlock - 1) / kReduceBlock;
    std::vector<double> partial(nblocks, 0.0);
    for_each_block(count, threads, [&](std::size_t lo, std::size_t hi, std::size_t b) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[b] = s;
    });
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

// Deterministic max of value(i); ties resolved toward the lowest index.
template <class Value>
std::pair<double, std::size_t> block_max(std::size_t count, int threads, Value&& value) {
    const std::size_t nblocks = (count + kReduceBlock - 1) / kReduceBlock;
    std::vector<std::pair<double, std::size_t>> partial(
        nblocks, {-std::numeric_limits<double>::infinity(), 0});
    for_each_block(count, threads, [&](std::size_t lo, std::size_t hi, std::size_t b) {
        double best = -std::numeric_limits<double>::infinity();
        std::size_t arg = lo;
        for (std::size_t i = lo; i < hi; ++i) {
            const double v = value(i);
            if (v > best) {
                best = v;
                arg = i;
            }
        }
        partial[b] = {best, arg};
    });
    std::pair<double, std::size_t> out{-std::numeric_limits<double>::infinity(), 0};
    for (const auto& p : partial)
        if (p.first > out.first) out = p;
    return out;
}

}  // namespace tmf
