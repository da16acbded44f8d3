#pragma once

#include <string>
#include <vector>

namespace tmf {

struct Check {
    std::string name;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<Check> checks;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void append(const VerifyReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

// The quantitative verification suite. Each criterion function runs a
// self-contained batch of checks against pinned constants and tolerances.
VerifyReport criterion_normalizations(int threads = 0);        // 1
VerifyReport criterion_max_exponent(int threads = 0);          // 2
VerifyReport criterion_argmax_location(int threads = 0);       // 3
VerifyReport criterion_gap_constant(int threads = 0);          // 4
VerifyReport criterion_gibbs_bound(int threads = 0);           // 5
VerifyReport criterion_partition_of_unity(int threads = 0);    // 6
VerifyReport criterion_local_dimension(int threads = 0);       // 7
VerifyReport criterion_entropy(int threads = 0);               // 8
VerifyReport criterion_derived_constants(int threads = 0);     // 9
VerifyReport criterion_spectrum_endpoints(int threads = 0);    // 10
VerifyReport criterion_pressure_shape(int threads = 0);        // 11
VerifyReport criterion_restricted_monotone(int threads = 0);   // 12
VerifyReport criterion_collapse(int threads = 0);              // 13
VerifyReport criterion_g_identity(int threads = 0);            // 14
VerifyReport criterion_pressure_oracle(int threads = 0);       // 15

struct CriterionEntry {
    int index;
    const char* label;
    VerifyReport (*run)(int threads);
};

// All criteria in order 1..15.
const std::vector<CriterionEntry>& all_criteria();

// Suites: "all", "symbolic", "potential", "measure", "pressure", "entropy".
VerifyReport run_suite(const std::string& suite, int threads = 0);
bool is_known_suite(const std::string& suite);

}  // namespace tmf
