#ifndef DRESSEDPAIR_ACCEPTANCE_HPP_
#define DRESSEDPAIR_ACCEPTANCE_HPP_

#include <string>
#include <vector>

namespace dressedpair {

struct CriterionResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;  // largest measured deviation
    double tolerance = 0.0; // pinned acceptance threshold
    std::string detail;     // parameters used, informational notes
};

struct AcceptanceOptions {
    // Test hook: force the named criterion's tolerance to zero so the
    // reporting path for failures can itself be tested.
    std::string corrupt_tolerance_for;
};

// The full cross-validation battery. Every tolerance is fixed here; a
// criterion fails loudly rather than being skipped.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

// Single criterion by index (0-based) for selective runs.
CriterionResult run_acceptance_criterion(int index, const AcceptanceOptions& opts = {});
int acceptance_criterion_count();

} // namespace dressedpair

#endif
