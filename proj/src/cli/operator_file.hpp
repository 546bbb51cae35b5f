#pragma once

#include "qdiv/types.hpp"

#include <optional>
#include <string>

namespace qdiv::cli {

// On-disk operator: a JSON object
//   {"dim": n, "role": "...", "re": [[...], ...], "im": [[...], ...]}
// with every float written as %.17g. "role" is optional and one of
// density, positive, projection, unitary.
struct OperatorFile {
  ComplexMatrix matrix;
  std::optional<std::string> role;
};

std::string serialize_operator(const ComplexMatrix& M, const std::optional<std::string>& role);

// Throws InputError on malformed text, ragged arrays, a dim mismatch, an
// unknown role, or an operator that fails its role's validation.
OperatorFile parse_operator(const std::string& text, const std::string& origin = "<text>");

OperatorFile load_operator(const std::string& path);
void write_operator(const std::string& path, const ComplexMatrix& M,
                    const std::optional<std::string>& role);

// Throws InputError unless M passes the validation of `role`.
void validate_role(const ComplexMatrix& M, const std::string& role, const std::string& origin);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qdiv::cli
