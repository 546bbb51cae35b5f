#pragma once

#include "qdiv/spectral.hpp"
#include "qdiv/types.hpp"

namespace qdiv {

// A positive semidefinite matrix with its spectral data and support cached.
// Construction validates Hermiticity and PSD; eigenvalues in
// [-tau_psd ||A||_2, 0) are clamped to 0 in the cached spectrum.
class PositiveOperator {
 public:
  explicit PositiveOperator(const ComplexMatrix& A, const Tolerances& tol = {});

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  const ComplexMatrix& support() const noexcept { return support_.projection; }
  const ComplexMatrix& support_basis() const noexcept { return support_.basis; }
  int rank() const noexcept { return support_.rank; }
  int dim() const noexcept { return spectrum_.dim; }
  // min eigenvalue > tau_supp * max eigenvalue
  bool definite() const noexcept { return support_.rank == spectrum_.dim; }
  bool is_zero() const noexcept { return support_.rank == 0; }
  double trace() const noexcept { return trace_; }
  const Tolerances& tolerances() const noexcept { return tol_; }
  // A^{1/2} from the cached (clamped) spectrum.
  ComplexMatrix sqrt() const;

 protected:
  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
  SupportProjection support_;
  double trace_ = 0.0;
  Tolerances tol_;
};

// A PositiveOperator with |tr - 1| <= 1e-10.
class DensityOperator : public PositiveOperator {
 public:
  static constexpr double kTraceTolerance = 1e-10;
  explicit DensityOperator(const ComplexMatrix& A, const Tolerances& tol = {});
};

// supp A is a subspace of supp B, decided by ranks: rank(supp(P_A + P_B)) == rank(P_B).
bool support_contained(const PositiveOperator& A, const PositiveOperator& B);

// supp A is orthogonal to supp B: ||P_A P_B||_F <= tau_proj.
bool supports_orthogonal(const PositiveOperator& A, const PositiveOperator& B);

}  // namespace qdiv
