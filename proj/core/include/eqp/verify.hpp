#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eqp {

/// One verified assertion; `anchor` names the assertion family for reports.
struct CheckResult {
    std::string id;
    std::string anchor;
    bool pass = false;
    std::string detail;
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs a verification suite at the given odd order; deterministic for a
/// fixed seed.  Results come back sorted by assertion id.  Throws
/// std::invalid_argument for even or too small p and for unknown suites.
std::vector<CheckResult> run_suite(int p, const std::string& suite, uint64_t seed);

}  // namespace eqp
