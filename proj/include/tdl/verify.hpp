#pragma once

#include <string>
#include <vector>

namespace tdl {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    int jobs = 1;
    /// Run only these criterion ids (empty = all).
    std::vector<int> only;
};

/// Runs the full verification suite: closed-formula reproduction, oracle
/// equivalence, the counting identities, and determinism checks. Every
/// tolerance is pinned in code.
std::vector<CriterionResult> run_verification(const VerifyOptions& options);

bool all_pass(const std::vector<CriterionResult>& results);

/// One "[PASS]/[FAIL] id name  (detail)" line per criterion.
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace tdl
