#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planecol {

// Command-line entry point. JSON reports go to `out`, human-readable
// summaries to `err`. Returns 0 on success, 2 on infeasible/invalid verdicts,
// 3 on malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planecol
