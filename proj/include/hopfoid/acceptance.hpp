#pragma once

#include <string>
#include <vector>

namespace hopfoid {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // extra per-criterion output (discrepancy reports)
};

struct AcceptanceReport {
    std::vector<CriterionResult> results;
    bool all_pass = true;
    // One "PASS/FAIL  n. name" line per criterion, details indented under
    // the owning line, then a summary line.
    std::string table() const;
};

// Runs the full acceptance battery (deterministic, seeded randomness).
AcceptanceReport run_acceptance();

// Machine-readable record of the orientation conventions the toolkit fixes:
// the horizontality sign, the top-wedge connection, the fundamental-series
// multiplication side, the Weyl coproduct coefficient placement, and the
// convolution attachment side.
std::string sign_convention_ledger();

}  // namespace hopfoid
