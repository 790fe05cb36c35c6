#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace annulus {

struct VerifyConfig {
    std::uint64_t seed = 1;
    double tolerance = 1e-9;  // build_graph boundary tolerance used by every check
    std::string only;         // module filter; empty runs everything
};

struct CheckResult {
    std::string module;
    std::string name;
    std::string anchor;  // the quantity or property being checked
    bool passed = false;
    std::string detail;
};

struct VerifySummary {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::size_t failures() const;
};

/// Module names accepted by VerifyConfig::only.
std::vector<std::string> verify_modules();

/// Runs the property battery of every module (or just `only`).
VerifySummary verify_suite(const VerifyConfig& config);

} // namespace annulus
