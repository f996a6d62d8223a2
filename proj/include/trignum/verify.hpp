#ifndef TRIGNUM_VERIFY_HPP
#define TRIGNUM_VERIFY_HPP

#include <string>
#include <vector>

namespace trignum::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // the falsifying witness on failure, a summary otherwise
    double seconds = 0;
};

// Suites: lemmas, identities, theorem2, figure1, figure2, figure3, all.
const std::vector<std::string>& suite_names();
std::vector<CheckResult> run_suite(const std::string& suite);

// The acceptance criteria, numbered; each enforces its runtime budget.
struct Criterion {
    int number;
    std::string title;
    std::vector<CheckResult> checks;
    double seconds = 0;
    double budget_seconds = 0;
    bool pass = false;
};

std::vector<Criterion> run_acceptance();

}  // namespace trignum::verify

#endif
