#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace powermin {

struct VerifyCheck {
    std::string name;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::string suite_name;
    std::vector<VerifyCheck> checks;

    bool overall_pass() const noexcept;
    std::string to_json(int indent = 2) const;
};

/// uniqueness, symmetry, confinement, spreading, quadratic-newtonian, case1-bounds, gradient-fd
const std::vector<std::string_view>& verify_suite_names();

/// Runs a named suite with its fixed parameters and tolerances.
/// Throws std::invalid_argument for an unknown name.
VerifyReport run_verify_suite(std::string_view name);

} // namespace powermin
