#pragma once

#include <string>
#include <vector>

namespace smoothdual {

struct RegressionResult {
    std::string name;
    std::string example;  ///< which worked example or property the check reproduces
    bool passed = false;
    std::string detail;
};

/// Worked-example regressions and quick property sweeps behind the `verify` verb.
std::vector<RegressionResult> run_regressions();

} // namespace smoothdual
