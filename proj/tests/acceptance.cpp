// Acceptance suite: every quantitative exit criterion, one pass/fail line
// per criterion at its pinned tolerance.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>

#include "tmcore/verify.hpp"

using namespace tmf;

namespace {

void run_criterion(int index, double time_cap_seconds = 0.0) {
    const CriterionEntry& entry = all_criteria().at(static_cast<std::size_t>(index - 1));
    const auto start = std::chrono::steady_clock::now();
    const VerifyReport report = entry.run(0);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %02d (%s): %s  [%.2f s]\n", entry.index, entry.label,
                report.overall() ? "PASS" : "FAIL", elapsed);
    for (const auto& c : report.checks) {
        INFO(c.name, ": expected ", c.expected, ", observed ", c.observed, ", tolerance ",
             c.tolerance);
        CHECK(c.pass);
    }
    if (time_cap_seconds > 0.0) CHECK(elapsed < time_cap_seconds);
}

}  // namespace

TEST_CASE("criterion 01: pressure normalizations") { run_criterion(1, 10.0); }
TEST_CASE("criterion 02: maximal scaling exponent") { run_criterion(2, 1.0); }
TEST_CASE("criterion 03: argmax location") { run_criterion(3, 60.0); }
TEST_CASE("criterion 04: gap constant") { run_criterion(4); }
TEST_CASE("criterion 05: Gibbs upper bound") { run_criterion(5); }
TEST_CASE("criterion 06: partition of unity") { run_criterion(6); }
TEST_CASE("criterion 07: minimal local dimension") { run_criterion(7); }
TEST_CASE("criterion 08: metric entropy") { run_criterion(8, 30.0); }
TEST_CASE("criterion 09: derived constants") { run_criterion(9); }
TEST_CASE("criterion 10: spectrum endpoints") { run_criterion(10); }
TEST_CASE("criterion 11: pressure shape") { run_criterion(11); }
TEST_CASE("criterion 12: restricted pressure monotonicity") { run_criterion(12); }
TEST_CASE("criterion 13: collapse algorithm") { run_criterion(13); }
TEST_CASE("criterion 14: g-function identity") { run_criterion(14); }
TEST_CASE("criterion 15: pressure oracle cross-check") { run_criterion(15); }
