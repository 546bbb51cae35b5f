#include "qdiv/linalg.hpp"

#include "qdiv/spectral.hpp"

#include <string>

namespace qdiv {

Complex hs_inner(const ComplexMatrix& A, const ComplexMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw DimensionError("hs_inner: operands have different shapes");
  }
  // tr(A B*) = sum_ij A_ij conj(B_ij)
  Complex acc{0.0, 0.0};
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      acc += A(i, j) * std::conj(B(i, j));
    }
  }
  return acc;
}

ComplexMatrix rank_one(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("rank_one: vectors have different lengths");
  }
  return x * y.adjoint();
}

void require_square(const ComplexMatrix& A, const char* what) {
  if (A.rows() != A.cols() || A.rows() < 1) {
    throw DimensionError(std::string(what) + ": matrix must be square with dim >= 1");
  }
}

void require_same_dim(const ComplexMatrix& A, const ComplexMatrix& B, const char* what) {
  require_square(A, what);
  require_square(B, what);
  if (A.rows() != B.rows()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(A.rows()) + " vs " + std::to_string(B.rows()) + ")");
  }
}

bool is_hermitian(const ComplexMatrix& A, double rel_tol) {
  if (A.rows() != A.cols()) return false;
  const double norm = A.norm();
  return (A - A.adjoint()).norm() <= rel_tol * norm;
}

ComplexMatrix gram(const ComplexMatrix& X) { return hermitian_part(X * X.adjoint()); }

ComplexMatrix hermitian_part(const ComplexMatrix& A) {
  return (A + A.adjoint()) * 0.5;
}

double hermitian_norm2(const ComplexMatrix& A) {
  const auto eig = eig_hermitian(A);
  if (eig.values.size() == 0) return 0.0;
  return std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
}

ComplexMatrix conjugate_by(const ComplexMatrix& U, const ComplexMatrix& A, bool antiunitary) {
  require_same_dim(U, A, "conjugate_by");
  if (antiunitary) {
    return U * A.conjugate() * U.adjoint();
  }
  return U * A * U.adjoint();
}

double unitarity_defect(const ComplexMatrix& U) {
  const auto n = U.rows();
  return (U.adjoint() * U - ComplexMatrix::Identity(n, n)).norm();
}

}  // namespace qdiv
