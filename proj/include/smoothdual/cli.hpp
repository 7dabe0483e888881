#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smoothdual::cli {

enum ExitCode : int {
    kOk = 0,
    kRegressionFailure = 1,
    kValidationError = 2,
    kLimitRefused = 3,
    kNumericalFailure = 4,
};

/*
 * Runs one command line (argv without the program name). The JSON report
 * goes to `out`, human-readable diagnostics to `err`. Every exit path
 * writes a single JSON document to `out`; errors look like
 * {"error": {"kind": "...", "message": "..."}}.
 */
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace smoothdual::cli
