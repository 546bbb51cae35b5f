#pragma once

#include "qdiv/scalar_function.hpp"
#include "qdiv/types.hpp"

#include <functional>
#include <vector>

namespace qdiv {

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors; // unitary, column k belongs to values(k)
};

struct JacobiOptions {
  int max_sweeps = 64;
  double rel_off_diag = 1e-13;  // stop when ||offdiag||_F <= rel_off_diag * ||A||_F
  double herm_tol = 1e-12;
};

// Cyclic Jacobi eigensolver for complex Hermitian matrices.
// Throws ValidationError for non-Hermitian input, ConvergenceError when the
// off-diagonal mass is still above threshold after max_sweeps.
EigenDecomposition eig_hermitian(const ComplexMatrix& A, const JacobiOptions& opts = {});

struct SpectralCluster {
  double eigenvalue;
  ComplexMatrix projection;
  ComplexMatrix basis;  // n x multiplicity, orthonormal columns spanning the eigenspace
  int multiplicity;
};

// Distinct-eigenvalue decomposition A = sum_k lambda_k P_k.
struct SpectralDecomposition {
  int dim = 0;
  std::vector<SpectralCluster> clusters;  // ascending eigenvalue

  double max_abs_eigenvalue() const;
  double max_eigenvalue() const;
  double min_eigenvalue() const;
  ComplexMatrix reconstruct() const;
};

// Eigenvalues whose consecutive gap is <= tau_spec * max(1, ||A||_2) are merged;
// the merged eigenvalue is the members' mean.
SpectralDecomposition cluster_spectrum(const ComplexMatrix& A, double tau_spec = Tolerances{}.spec);

// sum_k phi(lambda_k) P_k. For a NonNegative-domain phi, eigenvalues in
// [-tau_psd ||A||_2, tau_supp ||A||_2] are treated as exactly 0; anything more
// negative is a DomainError. A Positive-domain phi rejects eigenvalues
// <= tau_supp ||A||_2.
ComplexMatrix apply_spectral_fn(const ComplexMatrix& A, const ScalarFunctionSpec& phi,
                                const Tolerances& tol = {});
ComplexMatrix apply_spectral_fn(const SpectralDecomposition& spec, const ScalarFunctionSpec& phi,
                                const Tolerances& tol = {});

// Unchecked variant for internal formulas where the caller has already
// restricted the spectrum.
ComplexMatrix apply_spectral_fn(const SpectralDecomposition& spec,
                                const std::function<double(double)>& phi);

struct SupportProjection {
  ComplexMatrix projection;
  ComplexMatrix basis;  // n x rank isometry onto the support
  int rank = 0;
};

// Throws ValidationError when min eigenvalue < -tau_psd ||A||_2.
void require_psd(const SpectralDecomposition& spec, const Tolerances& tol = {},
                 const char* what = "operator");

// Projection onto the span of eigenvectors with eigenvalue > tau_supp * max eigenvalue.
SupportProjection support_projection(const ComplexMatrix& A, const Tolerances& tol = {});
SupportProjection support_projection(const SpectralDecomposition& spec, const Tolerances& tol = {});

// Orthonormal basis V of range(P), from P's spectral decomposition. Throws
// ValidationError when P is not a Hermitian idempotent.
ComplexMatrix projection_basis(const ComplexMatrix& P, const Tolerances& tol = {});

// V* A V, V from projection_basis(P). A 0x0 matrix when P = 0.
ComplexMatrix compress_to_support(const ComplexMatrix& A, const ComplexMatrix& P,
                                  const Tolerances& tol = {});

// sum over clusters with lambda > tau_supp * max of lambda^p P_lambda: the
// power taken on the support, zero on the kernel.
ComplexMatrix support_power(const SpectralDecomposition& spec, double p, const Tolerances& tol = {});

// Trace of phi applied to a PSD matrix, eigenvalues snapped as in apply_spectral_fn.
double trace_fn(const ComplexMatrix& A, const ScalarFunctionSpec& phi, const Tolerances& tol = {});

struct PolarDecomposition {
  ComplexMatrix unitary;
  ComplexMatrix modulus;  // (X* X)^{1/2}
};

// X = U H. For singular X, U is completed on ker(H) by Gram-Schmidt over the
// standard basis.
PolarDecomposition polar_unitary(const ComplexMatrix& X);

}  // namespace qdiv
