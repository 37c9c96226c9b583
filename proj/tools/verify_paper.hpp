#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace digitop {
namespace verify {

struct Claim {
    enum class Status { Pass, Fail, Skipped };
    std::string id;
    std::string computed;
    std::string expected;
    Status status;
};

struct Options {
    int n_snake = 6;    // even, >= 2
    int n_rect = 5;     // >= 2 (the c_2 diameter formulas need n >= 2)
    int n_annulus = 2;  // >= 1
    std::uint64_t budget = 2'000'000;
    // Self-test hook: corrupt one expectation so the report must show a
    // FAIL row and a nonzero exit.
    bool corrupt_one_expectation = false;
};

// Runs every claim of the source material at the configured parameters.
// Expectations are evaluated from the closed-form expressions at the
// given n, never from constants baked for a single n. Claims whose
// search exceeds the budget come back Skipped, not Fail.
std::vector<Claim> run_paper_claims(const Options& opt);

// One line per claim: "<id> <computed> <expected> <PASS|FAIL|SKIPPED>".
// Returns the number of FAIL rows.
int print_report(std::ostream& os, const std::vector<Claim>& claims);

}  // namespace verify
}  // namespace digitop
