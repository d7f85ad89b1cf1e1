#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuboid {

/// Runs one CLI invocation. Exit codes: 0 success, 1 certification
/// failure, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuboid
