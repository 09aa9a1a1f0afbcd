#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eigenscheme {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 ok, 1 usage or parse error, 2 unsupported field, 3 guard, degenerate
/// sample or disagreement between the two routes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eigenscheme
