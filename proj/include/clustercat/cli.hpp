#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace clustercat::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a domain error or failed verification, 2 on a usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clustercat::cli
