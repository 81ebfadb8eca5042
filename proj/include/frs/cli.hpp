#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frs::cli {

/// Entry point of the command-line harness, callable in-process so tests
/// can drive the exact user-facing surface. `args` excludes the program
/// name. Exit codes: 0 success (and all checks/bounds passed), 1 usage or
/// input error, 2 contract violation (a certified bound failed), 3
/// enumeration/resource limit exceeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace frs::cli
