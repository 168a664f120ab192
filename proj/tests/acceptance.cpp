// Acceptance gate: runs every criterion at its stated (exact) tolerance and
// prints one pass/fail line per criterion.

#include <cstdio>

#include "eqclass/verify.hpp"

int main() {
    bool ok = true;
    for (const auto& c : eqclass::verify::run_acceptance_suite()) {
        std::printf("%s %s%s%s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.empty() ? "" : " — ", c.detail.c_str());
        ok = ok && c.passed;
    }
    std::printf("%s\n", ok ? "acceptance: all criteria passed"
                           : "acceptance: FAILURES present");
    return ok ? 0 : 1;
}
