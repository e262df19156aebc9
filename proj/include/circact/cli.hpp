#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace circact::cli {

/// Exit codes: 0 success, 1 validation or assertion failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circact::cli
