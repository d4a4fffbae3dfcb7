#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wfh {

/* Dispatches one command-line invocation. Returns the process exit code:
 * 0 on success, 2 on usage errors, 3 when a model refuses a query. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfh
