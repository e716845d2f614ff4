#pragma once

#include <iosfwd>

namespace ahpeval::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitValidation = 2,
  kExitConsistencyGate = 3,
  kExitTransport = 4,
};

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ahpeval::cli
