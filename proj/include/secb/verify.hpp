#pragma once

#include <string>
#include <vector>

namespace secb {

struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0.0;      // measured quantity
    double tolerance = 0.0;  // threshold it was held to
};

struct VerifyOptions {
    bool quick = false;
    /// Multiplies every tolerance; read from SECB_VERIFY_TOL_SCALE by the CLI.
    double tolerance_scale = 1.0;
};

/// Invariant checks on the default experiment parameters.
std::vector<CheckResult> run_invariant_suite(const VerifyOptions& options = {});

}  // namespace secb
