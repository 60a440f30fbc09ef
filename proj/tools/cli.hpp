#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncg::cli {

  // Runs one command line (args excludes the program name) and returns the
  // exit status: 0 success, 1 domain error, 2 parse or usage error, 3 internal.
  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncg::cli
