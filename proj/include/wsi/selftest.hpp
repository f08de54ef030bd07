#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wsi::selftest {

struct CheckResult {
    std::string module;
    std::string name;
    double deviation = 0.0;
    double threshold = 0.0;
    bool passed = false;
    std::string error;  // non-empty when the check threw
};

/// Module names accepted by `run`.
const std::vector<std::string>& modules();

/// Runs the built-in invariant checks, optionally restricted to one module.
/// A check passes when its measured deviation is at most its own threshold,
/// or at most `tol_override` when given.
/// Throws DomainError for an unknown module name.
std::vector<CheckResult> run(const std::string& only = "", std::optional<double> tol_override = std::nullopt);

}  // namespace wsi::selftest
