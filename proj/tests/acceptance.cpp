// Acceptance gate: runs the pinned verification manifest and prints one
// pass/fail line per criterion. Exit status 0 only when everything holds.

#include <cstdio>

#include "knotcalc/checks.hpp"

int main() {
    int failures = 0;
    for (const knotcalc::CheckResult& r : knotcalc::run_verification_checks()) {
        if (r.passed) {
            std::printf("PASS %s: %s\n", r.id.c_str(), r.description.c_str());
        } else {
            ++failures;
            std::printf("FAIL %s: %s -- %s\n", r.id.c_str(), r.description.c_str(),
                        r.detail.c_str());
        }
    }
    return failures == 0 ? 0 : 1;
}
