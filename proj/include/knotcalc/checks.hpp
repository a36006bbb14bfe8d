#ifndef KNOTCALC_CHECKS_HPP
#define KNOTCALC_CHECKS_HPP

#include <string>
#include <vector>

namespace knotcalc {

/// One entry of the pinned verification manifest. The CLI's verify-paper
/// subcommand and the acceptance test suite share this single source of
/// expected values.
struct CheckResult {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail;  // failure explanation, empty on success
};

/// Runs every pinned check (exact polynomial/grading/standard-form/
/// upsilon/epsilon/tau values plus the corpus property suites) and
/// returns one result per check, in a fixed order.
std::vector<CheckResult> run_verification_checks();

}  // namespace knotcalc

#endif
