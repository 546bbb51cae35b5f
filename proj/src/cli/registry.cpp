#include "cli/registry.hpp"

#include "cli/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace qdiv::cli {

namespace {

double parse_parameter(const std::string& name, const std::string& text) {
  if (text.empty()) throw UsageError("function '" + name + "' needs a parameter after ':'");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw UsageError("function '" + name + "': bad parameter '" + text + "'");
  }
  return v;
}

}  // namespace

ScalarFunctionSpec lookup_function(const std::string& name) {
  const auto colon = name.find(':');
  const std::string family = name.substr(0, colon);
  const bool has_param = colon != std::string::npos;
  const std::string param = has_param ? name.substr(colon + 1) : std::string();

  if (family == "xlogx" && !has_param) return functions::xlogx();
  if (family == "ratio" && !has_param) return functions::ratio();
  if (family == "power" && has_param) return functions::power(parse_parameter(name, param));
  if (family == "linear" && has_param) return functions::linear(parse_parameter(name, param));
  throw UsageError("unknown function '" + name +
                   "' (expected power:P, xlogx, linear:C or ratio)");
}

}  // namespace qdiv::cli
