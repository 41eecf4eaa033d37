#pragma once

#include <string>
#include <vector>

namespace puncture {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // measured residuals / counterexample description
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

enum class VerifyProfile { Default, Strict };

// Runs the whole invariant suite: composition identity, Bell-vs-Newton
// reversion, log-coefficient dual path, lambda eta oracle, the gamma3
// example, Eisenstein self-consistency, expansion-vs-direct convergence,
// and the Picard reciprocal identity. `order` controls how deep the exact
// checks go. `inject_corruption` flips one lambda coefficient first; the
// suite must then fail (negative control for the harness).
VerifyReport run_verification(int order, VerifyProfile profile = VerifyProfile::Default,
                              bool inject_corruption = false);

} // namespace puncture
