#include "qdiv/operators.hpp"

#include "qdiv/linalg.hpp"

#include <cmath>
#include <string>

namespace qdiv {

PositiveOperator::PositiveOperator(const ComplexMatrix& A, const Tolerances& tol) : tol_(tol) {
  require_square(A, "PositiveOperator");
  if (!is_hermitian(A, tol.herm)) {
    throw ValidationError("operator is not Hermitian (||A - A*||_F > tau_herm ||A||_F)");
  }
  matrix_ = hermitian_part(A);
  spectrum_ = cluster_spectrum(matrix_, tol.spec);
  require_psd(spectrum_, tol, "operator");
  for (auto& c : spectrum_.clusters) {
    if (c.eigenvalue < 0.0) c.eigenvalue = 0.0;
  }
  support_ = support_projection(spectrum_, tol);
  trace_ = matrix_.trace().real();
}

ComplexMatrix PositiveOperator::sqrt() const { return support_power(spectrum_, 0.5, tol_); }

DensityOperator::DensityOperator(const ComplexMatrix& A, const Tolerances& tol)
    : PositiveOperator(A, tol) {
  if (std::abs(trace_ - 1.0) > kTraceTolerance) {
    throw ValidationError("density operator must have unit trace (trace = " +
                          std::to_string(trace_) + ")");
  }
}

bool support_contained(const PositiveOperator& A, const PositiveOperator& B) {
  if (A.dim() != B.dim()) throw DimensionError("support_contained: dimension mismatch");
  if (A.rank() == 0) return true;
  if (A.rank() > B.rank()) return false;
  const auto joint = support_projection(A.support() + B.support(), A.tolerances());
  return joint.rank == B.rank();
}

bool supports_orthogonal(const PositiveOperator& A, const PositiveOperator& B) {
  if (A.dim() != B.dim()) throw DimensionError("supports_orthogonal: dimension mismatch");
  return (A.support() * B.support()).norm() <= A.tolerances().proj;
}

}  // namespace qdiv
