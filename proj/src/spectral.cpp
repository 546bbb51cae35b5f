#include "qdiv/spectral.hpp"

#include "qdiv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

namespace qdiv {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

double off_diagonal_norm(const ComplexMatrix& M) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < M.cols(); ++j) {
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
      if (i != j) acc += std::norm(M(i, j));
    }
  }
  return std::sqrt(acc);
}

// Zeroes M(p, q) with the unitary J = diag(1, conj(phase)) * [[c, s], [-s, c]]
// acting on coordinates (p, q): M <- J* M J, V <- V J.
void rotate(ComplexMatrix& M, ComplexMatrix& V, Eigen::Index p, Eigen::Index q) {
  const Complex apq = M(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;
  const double app = M(p, p).real();
  const double aqq = M(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c * std::conj(phase);

  const Eigen::Index n = M.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex mkp = M(k, p);
    const Complex mkq = M(k, q);
    M(k, p) = mkp * jpp + mkq * jqp;
    M(k, q) = mkp * jpq + mkq * jqq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex mpk = M(p, k);
    const Complex mqk = M(q, k);
    M(p, k) = std::conj(jpp) * mpk + std::conj(jqp) * mqk;
    M(q, k) = std::conj(jpq) * mpk + std::conj(jqq) * mqk;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = V(k, p);
    const Complex vkq = V(k, q);
    V(k, p) = vkp * jpp + vkq * jqp;
    V(k, q) = vkp * jpq + vkq * jqq;
  }
  M(p, q) = 0.0;
  M(q, p) = 0.0;
  M(p, p) = M(p, p).real();
  M(q, q) = M(q, q).real();
}

// Maps an eigenvalue to the argument passed to phi, or throws.
double snap_eigenvalue(double lambda, double scale, const ScalarFunctionSpec& phi,
                       const Tolerances& tol) {
  if (phi.domain() == Domain::NonNegative) {
    if (lambda < -tol.psd * scale) {
      throw DomainError("apply_spectral_fn: eigenvalue " + sci(lambda) +
                        " outside the domain of '" + phi.name() + "'");
    }
    if (std::abs(lambda) <= tol.supp * scale) return 0.0;
    return lambda;
  }
  if (lambda <= tol.supp * scale) {
    throw DomainError("apply_spectral_fn: eigenvalue " + sci(lambda) +
                      " outside the domain (0, inf) of '" + phi.name() + "'");
  }
  return lambda;
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& A, const JacobiOptions& opts) {
  require_square(A, "eig_hermitian");
  if (!is_hermitian(A, opts.herm_tol)) {
    throw ValidationError("eig_hermitian: input is not Hermitian");
  }
  const Eigen::Index n = A.rows();
  ComplexMatrix M = hermitian_part(A);
  ComplexMatrix V = ComplexMatrix::Identity(n, n);
  const double threshold = opts.rel_off_diag * M.norm();

  bool converged = false;
  for (int sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
    if (off_diagonal_norm(M) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == opts.max_sweeps) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        rotate(M, V, p, q);
      }
    }
  }
  if (!converged) {
    throw ConvergenceError("eig_hermitian: no convergence after " +
                           std::to_string(opts.max_sweeps) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return M(a, a).real() < M(b, b).real();
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = M(order[k], order[k]).real();
    out.vectors.col(k) = V.col(order[k]);
  }
  return out;
}

double SpectralDecomposition::max_abs_eigenvalue() const {
  double m = 0.0;
  for (const auto& c : clusters) m = std::max(m, std::abs(c.eigenvalue));
  return m;
}

double SpectralDecomposition::max_eigenvalue() const {
  return clusters.empty() ? 0.0 : clusters.back().eigenvalue;
}

double SpectralDecomposition::min_eigenvalue() const {
  return clusters.empty() ? 0.0 : clusters.front().eigenvalue;
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const auto& c : clusters) out += c.eigenvalue * c.projection;
  return out;
}

SpectralDecomposition cluster_spectrum(const ComplexMatrix& A, double tau_spec) {
  const auto eig = eig_hermitian(A);
  const Eigen::Index n = eig.values.size();
  double norm2 = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) norm2 = std::max(norm2, std::abs(eig.values(k)));
  const double gap = tau_spec * std::max(1.0, norm2);

  SpectralDecomposition out;
  out.dim = static_cast<int>(n);
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && eig.values(end) - eig.values(end - 1) <= gap) ++end;
    const Eigen::Index m = end - start;
    SpectralCluster c;
    c.eigenvalue = eig.values.segment(start, m).mean();
    c.basis = eig.vectors.middleCols(start, m);
    c.projection = c.basis * c.basis.adjoint();
    c.multiplicity = static_cast<int>(m);
    out.clusters.push_back(std::move(c));
    start = end;
  }
  return out;
}

ComplexMatrix apply_spectral_fn(const SpectralDecomposition& spec, const ScalarFunctionSpec& phi,
                                const Tolerances& tol) {
  const double scale = spec.max_abs_eigenvalue();
  ComplexMatrix out = ComplexMatrix::Zero(spec.dim, spec.dim);
  for (const auto& c : spec.clusters) {
    out += phi(snap_eigenvalue(c.eigenvalue, scale, phi, tol)) * c.projection;
  }
  return out;
}

ComplexMatrix apply_spectral_fn(const ComplexMatrix& A, const ScalarFunctionSpec& phi,
                                const Tolerances& tol) {
  return apply_spectral_fn(cluster_spectrum(A, tol.spec), phi, tol);
}

ComplexMatrix apply_spectral_fn(const SpectralDecomposition& spec,
                                const std::function<double(double)>& phi) {
  ComplexMatrix out = ComplexMatrix::Zero(spec.dim, spec.dim);
  for (const auto& c : spec.clusters) out += phi(c.eigenvalue) * c.projection;
  return out;
}

void require_psd(const SpectralDecomposition& spec, const Tolerances& tol, const char* what) {
  const double scale = spec.max_abs_eigenvalue();
  if (spec.min_eigenvalue() < -tol.psd * scale) {
    throw ValidationError(std::string(what) + " is not positive semidefinite (min eigenvalue " +
                          sci(spec.min_eigenvalue()) + ")");
  }
}

SupportProjection support_projection(const SpectralDecomposition& spec, const Tolerances& tol) {
  require_psd(spec, tol, "support_projection input");
  const double threshold = tol.supp * spec.max_eigenvalue();
  SupportProjection out;
  out.projection = ComplexMatrix::Zero(spec.dim, spec.dim);
  out.basis.resize(spec.dim, 0);
  if (spec.max_eigenvalue() <= 0.0) return out;
  for (const auto& c : spec.clusters) {
    if (c.eigenvalue <= threshold) continue;
    out.projection += c.projection;
    ComplexMatrix grown(spec.dim, out.basis.cols() + c.basis.cols());
    grown << out.basis, c.basis;
    out.basis = std::move(grown);
    out.rank += c.multiplicity;
  }
  return out;
}

SupportProjection support_projection(const ComplexMatrix& A, const Tolerances& tol) {
  return support_projection(cluster_spectrum(A, tol.spec), tol);
}

ComplexMatrix projection_basis(const ComplexMatrix& P, const Tolerances& tol) {
  require_square(P, "projection_basis");
  const double scale = std::max(1.0, P.norm());
  if ((P - P.adjoint()).norm() > tol.proj * scale || (P * P - P).norm() > tol.proj * scale) {
    throw ValidationError("projection_basis: matrix is not an orthogonal projection");
  }
  const auto eig = eig_hermitian(hermitian_part(P));
  const Eigen::Index n = P.rows();
  Eigen::Index first = 0;
  while (first < n && eig.values(first) < 0.5) ++first;
  return eig.vectors.rightCols(n - first);
}

ComplexMatrix compress_to_support(const ComplexMatrix& A, const ComplexMatrix& P,
                                  const Tolerances& tol) {
  require_same_dim(A, P, "compress_to_support");
  const ComplexMatrix V = projection_basis(P, tol);
  return V.adjoint() * A * V;
}

ComplexMatrix support_power(const SpectralDecomposition& spec, double p, const Tolerances& tol) {
  const double threshold = tol.supp * spec.max_eigenvalue();
  ComplexMatrix out = ComplexMatrix::Zero(spec.dim, spec.dim);
  for (const auto& c : spec.clusters) {
    if (c.eigenvalue > threshold && c.eigenvalue > 0.0) {
      out += std::pow(c.eigenvalue, p) * c.projection;
    }
  }
  return out;
}

double trace_fn(const ComplexMatrix& A, const ScalarFunctionSpec& phi, const Tolerances& tol) {
  const auto spec = cluster_spectrum(hermitian_part(A), tol.spec);
  const double scale = spec.max_abs_eigenvalue();
  double acc = 0.0;
  for (const auto& c : spec.clusters) {
    acc += c.multiplicity * phi(snap_eigenvalue(c.eigenvalue, scale, phi, tol));
  }
  return acc;
}

PolarDecomposition polar_unitary(const ComplexMatrix& X) {
  require_square(X, "polar_unitary");
  const Eigen::Index n = X.rows();
  const auto eig = eig_hermitian(hermitian_part(X.adjoint() * X));

  RealVector sigma(n);
  for (Eigen::Index k = 0; k < n; ++k) sigma(k) = std::sqrt(std::max(0.0, eig.values(k)));
  const double sigma_max = n > 0 ? sigma(n - 1) : 0.0;

  PolarDecomposition out;
  out.modulus = eig.vectors * sigma.cast<Complex>().asDiagonal() * eig.vectors.adjoint();

  // Left singular vectors, largest singular value first, re-orthogonalized.
  ComplexMatrix left(n, n);
  std::vector<bool> filled(static_cast<std::size_t>(n), false);
  std::vector<Eigen::Index> accepted;
  const auto orthogonalize = [&](ComplexVector u) {
    for (const Eigen::Index j : accepted) u -= left.col(j) * left.col(j).dot(u);
    return u;
  };
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    if (sigma_max == 0.0 || sigma(k) <= 1e-12 * sigma_max) break;
    ComplexVector u = orthogonalize(X * eig.vectors.col(k) / sigma(k));
    left.col(k) = u / u.norm();
    filled[static_cast<std::size_t>(k)] = true;
    accepted.push_back(k);
  }
  Eigen::Index next_basis = 0;
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    if (filled[static_cast<std::size_t>(k)]) continue;
    while (next_basis < n) {
      ComplexVector e = ComplexVector::Zero(n);
      e(next_basis++) = 1.0;
      ComplexVector u = orthogonalize(orthogonalize(e));
      if (u.norm() > 1e-6) {
        left.col(k) = u / u.norm();
        accepted.push_back(k);
        break;
      }
    }
  }
  out.unitary = left * eig.vectors.adjoint();
  return out;
}

}  // namespace qdiv
