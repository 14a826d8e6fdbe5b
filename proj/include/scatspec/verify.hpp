#pragma once

#include <string>
#include <vector>

namespace scatspec {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// The batch invariant battery behind the `verify-suite` command: reversal
// invariance of spectra, rank goldens, pattern-count oracle equivalence,
// type-enumeration completeness goldens, restriction-equivalence checks,
// and monotonicity of exact spectra.
std::vector<CheckResult> verify_suite();

}  // namespace scatspec
