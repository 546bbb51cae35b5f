#pragma once

#include <iosfwd>

namespace qdiv::cli {

// Entry point of the qdiv tool. Returns the process exit code:
// 0 success, 1 suite/assertion failure, 2 input validation failure, 3 usage error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qdiv::cli
