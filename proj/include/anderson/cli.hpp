#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace anderson {

/// Runs one CLI invocation. Always writes a single JSON document to `out`
/// (reports on success, an error object otherwise) and returns the exit
/// code: 0 success, 1 refuted expectation, 2 usage error, 3 cap exceeded.
/// The ANDERSON_CAP environment variable overrides the cardinality cap.
int run_command(const std::vector<std::string>& args, std::ostream& out);

}  // namespace anderson
