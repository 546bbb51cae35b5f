#include "qdiv/sampling.hpp"

#include "qdiv/linalg.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace qdiv {

std::uint64_t SeededRng::next_u64() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SeededRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double SeededRng::uniform_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

Complex SeededRng::complex_normal() {
  const double r = std::sqrt(-std::log(uniform_open()));
  const double theta = 2.0 * std::numbers::pi * uniform();
  return {r * std::cos(theta), r * std::sin(theta)};
}

double SeededRng::exponential() { return -std::log(uniform_open()); }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SeededRng mix(base ^ (index * 0xD1B54A32D192ED03ULL));
  mix.next_u64();
  return mix.next_u64();
}

ComplexMatrix ginibre(int n, SeededRng& rng) {
  if (n < 1) throw DimensionError("ginibre: n must be >= 1");
  ComplexMatrix G(n, n);
  // Row-major fill so the stream order is independent of storage order.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) G(i, j) = rng.complex_normal();
  }
  return G;
}

ComplexMatrix haar_unitary(int n, SeededRng& rng) {
  const ComplexMatrix G = ginibre(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(G);
  ComplexMatrix Q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& R = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const double r = std::abs(R(j, j));
    const Complex phase = r > 0.0 ? R(j, j) / r : Complex{1.0, 0.0};
    Q.col(j) *= phase;
  }
  return Q;
}

ComplexVector random_unit_vector(int n, SeededRng& rng) {
  if (n < 1) throw DimensionError("random_unit_vector: n must be >= 1");
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

DensityOperator random_density(int n, int rank, SeededRng& rng) {
  if (n < 1) throw DimensionError("random_density: n must be >= 1");
  if (rank < 1 || rank > n) {
    throw ValidationError("random_density: rank " + std::to_string(rank) + " not in [1, " +
                          std::to_string(n) + "]");
  }
  std::vector<double> p(rank);
  double total = 0.0;
  for (auto& x : p) total += (x = rng.exponential());
  const ComplexMatrix U = haar_unitary(n, rng);
  ComplexMatrix D = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < rank; ++k) D(k, k) = p[k] / total;
  return DensityOperator(hermitian_part(U * D * U.adjoint()));
}

PositiveOperator random_positive_definite(int n, double kappa, SeededRng& rng) {
  if (n < 1) throw DimensionError("random_positive_definite: n must be >= 1");
  if (!(kappa >= 1.0) || !std::isfinite(kappa)) {
    throw ValidationError("random_positive_definite: kappa must be finite and >= 1");
  }
  const double half_span = 0.5 * std::log(kappa);
  std::vector<double> lambda(n);
  for (auto& l : lambda) l = std::exp(-half_span + 2.0 * half_span * rng.uniform());
  const ComplexMatrix U = haar_unitary(n, rng);
  ComplexMatrix D = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) D(k, k) = lambda[k];
  return PositiveOperator(hermitian_part(U * D * U.adjoint()));
}

StateMap random_antiunitary(int n, SeededRng& rng) {
  return StateMap::antiunitary(haar_unitary(n, rng));
}

}  // namespace qdiv
