#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "convkit/minors.hpp"

namespace convkit::cli {

/// Runs one command line (without the program name). Returns 0 on success, 1 on a domain failure
/// (unrecoverable stream, failed predicate input, malformed file) and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default budgets overridden by CONVKIT_ENUM_BUDGET, CONVKIT_MINOR_BUDGET and CONVKIT_TRELLIS_BUDGET.
Budgets budgets_from_environment();

}  // namespace convkit::cli
