#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lbkit {

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; usage text goes to `err`. Returns 0 on
/// success, 1 on a domain error (reported as {"error": ...} on `out`) and 2
/// on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lbkit
