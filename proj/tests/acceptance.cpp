// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "trignum/verify.hpp"

int main() {
    bool all = true;
    for (const auto& c : trignum::verify::run_acceptance()) {
        std::printf("[%d] %-52s %s  (%.2fs, budget %.0fs)\n", c.number, c.title.c_str(),
                    c.pass ? "PASS" : "FAIL", c.seconds, c.budget_seconds);
        for (const auto& chk : c.checks) {
            if (chk.pass)
                std::printf("      - %-44s ok: %s\n", chk.name.c_str(), chk.detail.c_str());
            else
                std::printf("      - %-44s FAILED: %s\n", chk.name.c_str(), chk.detail.c_str());
        }
        all = all && c.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES PRESENT");
    return all ? 0 : 1;
}
