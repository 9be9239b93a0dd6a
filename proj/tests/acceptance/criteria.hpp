#ifndef PTCD_ACCEPTANCE_CRITERIA_HPP
#define PTCD_ACCEPTANCE_CRITERIA_HPP

#include <string>

namespace acceptance {

inline constexpr int kCriterionCount = 9;

struct CriterionResult {
    bool passed = false;
    std::string detail;
};

/// Runs one acceptance criterion (1-based). The run is deterministic: every
/// Monte Carlo estimate inside uses fixed seeds.
CriterionResult run_criterion(int index);

/// Short human label printed next to the pass/fail verdict.
std::string criterion_title(int index);

}  // namespace acceptance

#endif
