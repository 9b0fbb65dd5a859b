// Named runtime invariant checks covering every module, used by the CLI
// `verify` subcommand. Each check reports pass/fail with its worst margin.

#pragma once

#include <string>
#include <vector>

#include "qedsat/types.hpp"

namespace qedsat {

enum class VerifyLevel { Fast, Full };

struct CheckResult {
    std::string name;
    bool passed;
    double margin;  // distance to the threshold; negative when failed
    std::string detail;
};

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Fast;
    std::uint64_t seed = 20240901;
    // Test hook: perturbs one amplitude entry of every matrix under test so
    // the failure path of the reporting machinery can be exercised.
    bool corrupt_amplitudes = false;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace qedsat
