#pragma once

#include <string>
#include <vector>

#include "ecs/types.hpp"

// Cross-validation harness: runs every identity the three routes
// (closed form, Fock oracle, quadrature) are supposed to satisfy, over
// pinned parameter grids, and reports one residual per check. This is what
// `ecs verify` prints and what the acceptance suite drills into.

namespace ecs {

struct CheckResult {
    std::string name;
    double residual = 0.0;   // NaN when the check aborted with an error
    double tolerance = 0.0;
    bool pass = false;
    std::string note;        // error text or extra context, may be empty
};

struct VerifyOptions {
    bool paper_literal = false;  // use the literal S3 constants variant
    int trunc_dim = 0;           // 0 = per-state default dimension
    OscillatorConfig osc{};
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace ecs
