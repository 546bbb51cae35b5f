#include "cli/operator_file.hpp"

#include "cli/errors.hpp"
#include "qdiv/linalg.hpp"
#include "qdiv/operators.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qdiv::cli {

namespace {

constexpr double kUnitaryTolerance = 1e-10;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_array(std::ostringstream& out, const ComplexMatrix& M, bool imaginary) {
  out << "[\n";
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    out << "    [";
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (j > 0) out << ", ";
      out << format_double(imaginary ? M(i, j).imag() : M(i, j).real());
    }
    out << "]" << (i + 1 < M.rows() ? ",\n" : "\n");
  }
  out << "  ]";
}

Eigen::MatrixXd read_array(const nlohmann::json& doc, const char* key, int n,
                           const std::string& origin) {
  if (!doc.contains(key)) throw InputError(origin + ": missing key '" + key + "'");
  const auto& rows = doc.at(key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw InputError(origin + ": '" + key + "' must be an array of " + std::to_string(n) + " rows");
  }
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw InputError(origin + ": '" + key + "' row " + std::to_string(i) + " must have " +
                       std::to_string(n) + " entries");
    }
    for (int j = 0; j < n; ++j) {
      if (!row[j].is_number()) {
        throw InputError(origin + ": '" + key + "' entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") is not a number");
      }
      out(i, j) = row[j].get<double>();
    }
  }
  return out;
}

}  // namespace

std::string serialize_operator(const ComplexMatrix& M, const std::optional<std::string>& role) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << M.rows() << ",\n";
  if (role) out << "  \"role\": \"" << *role << "\",\n";
  out << "  \"re\": ";
  write_array(out, M, false);
  out << ",\n  \"im\": ";
  write_array(out, M, true);
  out << "\n}\n";
  return out.str();
}

void validate_role(const ComplexMatrix& M, const std::string& role, const std::string& origin) {
  try {
    if (role == "density") {
      DensityOperator check(M);
    } else if (role == "positive") {
      PositiveOperator check(M);
    } else if (role == "projection") {
      const Tolerances tol;
      const double scale = std::max(1.0, M.norm());
      if (!is_hermitian(M, tol.herm)) throw ValidationError("projection is not Hermitian");
      if ((M * M - M).norm() > tol.proj * scale) {
        throw ValidationError("projection is not idempotent (P^2 != P)");
      }
    } else if (role == "unitary") {
      require_square(M, "unitary");
      if (unitarity_defect(M) > kUnitaryTolerance) {
        throw ValidationError("unitary fails ||U*U - I||_F <= 1e-10");
      }
    } else {
      throw InputError(origin + ": unknown role '" + role +
                       "' (expected density, positive, projection or unitary)");
    }
  } catch (const Error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

OperatorFile parse_operator(const std::string& text, const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(origin + ": malformed operator file: " + e.what());
  }
  if (!doc.is_object()) throw InputError(origin + ": operator file must be a JSON object");
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer()) {
    throw InputError(origin + ": missing integer key 'dim'");
  }
  const int n = doc.at("dim").get<int>();
  if (n < 1) throw InputError(origin + ": dim must be >= 1");

  OperatorFile out;
  if (doc.contains("role")) {
    if (!doc.at("role").is_string()) throw InputError(origin + ": 'role' must be a string");
    out.role = doc.at("role").get<std::string>();
  }
  const Eigen::MatrixXd re = read_array(doc, "re", n, origin);
  const Eigen::MatrixXd im = read_array(doc, "im", n, origin);
  out.matrix = ComplexMatrix(n, n);
  out.matrix.real() = re;
  out.matrix.imag() = im;
  if (!out.matrix.allFinite()) throw InputError(origin + ": entries must be finite");
  if (out.role) validate_role(out.matrix, *out.role, origin);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError(path + ": cannot open for writing");
  out << text;
  if (!out) throw InputError(path + ": write failed");
}

OperatorFile load_operator(const std::string& path) {
  return parse_operator(read_text_file(path), path);
}

void write_operator(const std::string& path, const ComplexMatrix& M,
                    const std::optional<std::string>& role) {
  write_text_file(path, serialize_operator(M, role));
}

}  // namespace qdiv::cli
