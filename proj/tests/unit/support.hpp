#pragma once

#include "qdiv/operators.hpp"
#include "qdiv/sampling.hpp"
#include "qdiv/types.hpp"

#include <initializer_list>
#include <vector>

namespace qdiv::test {

inline ComplexMatrix diag(std::initializer_list<double> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  ComplexMatrix D = ComplexMatrix::Zero(n, n);
  Eigen::Index k = 0;
  for (const double v : values) D(k, k) = v, ++k;
  return D;
}

inline ComplexMatrix diag(const std::vector<double>& values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  ComplexMatrix D = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) D(k, k) = values[k];
  return D;
}

inline ComplexMatrix random_hermitian(int n, SeededRng& rng) {
  const ComplexMatrix G = ginibre(n, rng);
  return 0.5 * (G + G.adjoint());
}

// Probability vector with every entry >= floor before normalization.
inline std::vector<double> probabilities(int n, SeededRng& rng, double floor = 0.0) {
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& x : p) total += (x = floor + rng.exponential());
  for (auto& x : p) x /= total;
  return p;
}

inline ComplexMatrix similar(const ComplexMatrix& U, const std::vector<double>& eigenvalues) {
  return U * diag(eigenvalues) * U.adjoint();
}

inline double max_abs(const ComplexMatrix& M) { return M.cwiseAbs().maxCoeff(); }

}  // namespace qdiv::test
