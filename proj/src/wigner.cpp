#include "qdiv/wigner.hpp"

#include "qdiv/linalg.hpp"
#include "qdiv/spectral.hpp"

#include <cmath>
#include <cstdio>

namespace qdiv {

namespace {

constexpr double kProjectionTolerance = 1e-8;
constexpr double kTransitionTolerance = 1e-8;
constexpr double kPhaseZero = 1e-12;

std::string label(char kind, int index) { return std::string(1, kind) + std::to_string(index); }

void require_rank_one_projection(const LabeledProjection& p, int n) {
  const ComplexMatrix& P = p.projection;
  if (P.rows() != n || P.cols() != n) {
    throw DimensionError("image " + p.label + " has the wrong dimension");
  }
  const double herm = (P - P.adjoint()).norm();
  const double idem = (P * P - P).norm();
  const double tr_defect = std::abs(P.trace() - Complex{1.0, 0.0});
  if (herm > kProjectionTolerance || idem > kProjectionTolerance ||
      tr_defect > kProjectionTolerance) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "image %s is not a rank-one projection (hermiticity %.3g, idempotency %.3g, "
                  "trace defect %.3g)",
                  p.label.c_str(), herm, idem, tr_defect);
    throw ValidationError(buf);
  }
}

// Unit vector spanning the range of a rank-one projection.
ComplexVector range_vector(const ComplexMatrix& P) {
  const EigenDecomposition eig = eig_hermitian(hermitian_part(P));
  return eig.vectors.col(eig.vectors.cols() - 1);
}

}  // namespace

std::vector<LabeledProjection> wigner_probe_inputs(int n) {
  if (n < 1) throw DimensionError("wigner_probe_inputs: n must be >= 1");
  std::vector<LabeledProjection> out;
  const ComplexMatrix I = ComplexMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    out.push_back({label('E', i + 1), rank_one(I.col(i), I.col(i))});
  }
  const double r = 1.0 / std::sqrt(2.0);
  for (int j = 1; j < n; ++j) {
    const ComplexVector v = r * (I.col(0) + I.col(j));
    out.push_back({label('F', j + 1), rank_one(v, v)});
  }
  if (n >= 2) {
    const ComplexVector g = r * (I.col(0) + Complex{0.0, 1.0} * I.col(1));
    out.push_back({"G", rank_one(g, g)});
  }
  return out;
}

std::vector<LabeledProjection> wigner_images(const StateMap& map) {
  auto probes = wigner_probe_inputs(map.dim());
  for (auto& p : probes) p.projection = map.apply(p.projection);
  return probes;
}

WignerReconstruction wigner_reconstruct(const std::vector<LabeledProjection>& images) {
  if (images.empty()) throw ValidationError("wigner_reconstruct: no images");
  const int n = static_cast<int>(images.front().projection.rows());
  const auto inputs = wigner_probe_inputs(n);
  if (images.size() != inputs.size()) {
    throw ValidationError("wigner_reconstruct: expected " + std::to_string(inputs.size()) +
                          " images for dimension " + std::to_string(n) + ", got " +
                          std::to_string(images.size()));
  }
  for (const auto& p : images) require_rank_one_projection(p, n);

  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (std::size_t j = i + 1; j < inputs.size(); ++j) {
      const double before = hs_inner(inputs[i].projection, inputs[j].projection).real();
      const double after = hs_inner(images[i].projection, images[j].projection).real();
      if (std::abs(before - after) > kTransitionTolerance) {
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "transition probability of (%s, %s) not preserved: %.12g -> %.12g",
                      inputs[i].label.c_str(), inputs[j].label.c_str(), before, after);
        throw NoRepresentationError(buf, inputs[i].label, inputs[j].label);
      }
    }
  }

  // Columns: u_1 spans phi(E_1); u_j spans phi(E_j), rephased so that phi(F_j)
  // is the projection onto (u_1 + u_j)/sqrt2.
  ComplexMatrix U(n, n);
  U.col(0) = range_vector(images[0].projection);
  for (int j = 1; j < n; ++j) {
    ComplexVector u = range_vector(images[j].projection);
    const ComplexMatrix& F = images[n + j - 1].projection;
    const Complex c = 2.0 * u.dot(F * U.col(0));
    const double m = std::abs(c);
    if (m > 0.0) u *= c / m;
    U.col(j) = u;
  }

  WignerReconstruction out;
  if (n >= 2) {
    // U* phi(G) U is G itself for a unitary map and conj(G) for U o K; the
    // (2,1) entry is +i/2 or -i/2.
    const ComplexMatrix pulled = U.adjoint() * images.back().projection * U;
    out.antiunitary = pulled(1, 0).imag() < 0.0;
  }

  for (Eigen::Index i = 0; i < U.rows(); ++i) {
    const Complex z = U(i, 0);
    if (std::abs(z) > kPhaseZero) {
      U *= std::conj(z) / std::abs(z);
      break;
    }
  }
  out.unitary = U;

  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const double d =
        (conjugate_by(U, inputs[k].projection, out.antiunitary) - images[k].projection).norm();
    out.residual = std::max(out.residual, d);
  }
  return out;
}

}  // namespace qdiv
