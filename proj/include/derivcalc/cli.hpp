#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace derivcalc {

/// Runs the derivcalc command line on `args` (without the program name).
/// Returns 0 on success, 1 when a check fails or a problem is infeasible,
/// and 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace derivcalc
