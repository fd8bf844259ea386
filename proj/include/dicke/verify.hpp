// verify.hpp — Built-in cross-validation suite: closed-form frequencies against
// the symplectic oracle, the mean-field solver against dense grid minimization
// and the superradiant closed form, the bisected bistability boundary against
// the saddle-node closed form, and exact diagonalization against the
// normal-mode predictions.

#pragma once

#include <string>
#include <vector>

#include "dicke/table.hpp"

namespace dicke {

struct CheckResult {
    std::string name;
    bool pass{false};
    double metric{0.0};   // the quantity the check bounds (max error, etc.)
    std::string detail;
};

struct VerifyOptions {
    bool include_ed{true};  // the ED checks dominate the runtime
};

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

Table verification_table(const std::vector<CheckResult>& results);

}  // namespace dicke
