#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hecke::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kMismatch = 2,
  kNonIntegral = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli
