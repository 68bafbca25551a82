#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace svmod::cli {

/// Runs the command line given argv-style arguments (without the program
/// name). Exit codes: 0 success / all-pass, 1 semantic failure (a condition
/// or probe fails, an invariant aborts), 2 input error (parse, schema,
/// validation).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svmod::cli
