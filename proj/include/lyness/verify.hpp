#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lyness {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline constexpr uint64_t kDefaultVerifySeed = 0x1962'0715;

// Numbered verification suites; the numbering is stable and `verify_all`
// runs them in order.
SuiteResult verify_nine_cycle();                         // 1
SuiteResult verify_multiplication();                     // 2
SuiteResult verify_kq(uint64_t seed = kDefaultVerifySeed);          // 3
SuiteResult verify_torsion9();                           // 4
SuiteResult verify_table1();                             // 5
SuiteResult verify_table2();                             // 6
SuiteResult verify_pipeline();                           // 7
SuiteResult verify_positive_witness(long max_k = 25);    // 8
SuiteResult verify_witnesses();                          // 9
SuiteResult verify_global_periodicity(uint64_t seed = kDefaultVerifySeed);  // 10
SuiteResult verify_nonelliptic();                        // 11
SuiteResult verify_homomorphy(uint64_t seed = kDefaultVerifySeed);  // 12
SuiteResult verify_period12(uint64_t seed = kDefaultVerifySeed);    // 13
SuiteResult verify_h_for_period(uint64_t seed = kDefaultVerifySeed);  // 14

std::vector<SuiteResult> verify_all(uint64_t seed = kDefaultVerifySeed);

// Named suite lookup for the CLI: table1, table2, kq, torsion9, pipeline,
// witnesses, nonelliptic, homomorphy, all. Throws std::invalid_argument on
// unknown names.
std::vector<SuiteResult> run_suite(const std::string& name, uint64_t seed = kDefaultVerifySeed);

}  // namespace lyness
