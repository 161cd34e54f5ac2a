#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace galtwist::cli {

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kParse = 2,
  kPrecondition = 3,
  kResource = 4,
  kVerification = 5,
};

/// Runs one command line (args excludes the program name). The result
/// document goes to out, error documents to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galtwist::cli
