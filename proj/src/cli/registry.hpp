#pragma once

#include "qdiv/scalar_function.hpp"

#include <string>

namespace qdiv::cli {

// Built-in function families by name:
//   power:P    t^P
//   xlogx      t log t
//   linear:C   C (t - 1)
//   ratio      t / (1 + t)
// Throws UsageError for anything else.
ScalarFunctionSpec lookup_function(const std::string& name);

}  // namespace qdiv::cli
