#pragma once

#include <stdexcept>
#include <string>

namespace qdiv::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // a suite assertion failed or no representation exists
  kExitInput = 2,    // an input file failed to parse or validate
  kExitUsage = 3,    // unknown command, tag, flag or parameter
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qdiv::cli
