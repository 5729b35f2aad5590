#pragma once

// The acceptance harness: one runnable check per classification claim,
// printed as a pass/fail table.  Quick mode skips the two checks that
// need full automorphism / isomorphism searches on the 2662-vertex
// instances; everything else runs at its smallest valid parameters.

#include <iosfwd>
#include <string>
#include <vector>

namespace pentacover {

struct AcceptanceOptions {
    bool quick = false;
    std::string manifest_path; // empty = compiled-in default
};

struct CriterionResult {
    std::string id;
    std::string description;
    bool passed = true;
    bool skipped = false;
    std::string detail;
    double seconds = 0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& out);

/// True iff nothing failed.
bool all_passed(const std::vector<CriterionResult>& rs);

} // namespace pentacover
