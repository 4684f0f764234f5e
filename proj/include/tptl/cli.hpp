#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tptl {

/// Exit codes: 0 SAT/true, 1 UNSAT/false, 2 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tptl
