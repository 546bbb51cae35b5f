#pragma once

#include "qdiv/operators.hpp"
#include "qdiv/scalar_function.hpp"
#include "qdiv/types.hpp"

#include <cstdint>
#include <optional>

namespace qdiv {

// |tr h(BAB) - tr h(sqrt(A) B^2 sqrt(A))| for PSD A, B. The two arguments are
// X X* and X* X for X = B sqrt(A), so the deviation is pure round-off.
double trace_similarity_check(const PositiveOperator& A, const PositiveOperator& B,
                              const ScalarFunctionSpec& h);

struct OrderVerdict {
  bool spectral_le = false;       // B^2 <= C^2 from the spectrum of C^2 - B^2
  double min_gap_eigenvalue = 0;  // min eigenvalue of C^2 - B^2
  std::optional<ComplexMatrix> counterexample;  // A with tr h(BAB) > tr h(CAC)
  double max_violation = 0.0;     // largest tr h(BAB) - tr h(CAC) seen (may be <= 0)
  std::size_t probes = 0;
  // The spectrum says B^2 is not below C^2 yet no counterexample was found.
  bool inconclusive() const noexcept { return !spectral_le && !counterexample; }
  bool consistent() const noexcept { return !counterexample; }
  bool agrees_with_spectrum() const noexcept { return spectral_le == !counterexample; }
};

// Decides B^2 <= C^2 spectrally, then searches positive definite A for
// tr h(BAB) > tr h(CAC): rank-one-plus-delta I probes (delta = 1e-6) along the
// negative eigenvectors of C^2 - B^2 and random directions, then random
// positive definite A. Requires h strictly increasing with h(0) = 0.
OrderVerdict order_dominance_test(const PositiveOperator& B, const PositiveOperator& C,
                                  const ScalarFunctionSpec& h, std::size_t n_samples,
                                  std::uint64_t seed);

// max over sampled strictly positive probability vectors a, b in R^n of
// |sum_k b_k f(a_k / b_k)|.
double functional_eq_residual(const ScalarFunctionSpec& f, int n, std::size_t n_samples,
                              std::uint64_t seed);

struct Prop1Terms {
  double lhs = 0.0;  // (t^{1-a} + s^{1-a}) / 2
  double rhs = 0.0;  // ((t^{(1-a)/a} + s^{(1-a)/a}) / 2)^a
  double gap() const noexcept { return std::abs(lhs - rhs); }
};

struct Prop1Witness {
  double t = 0.0;
  double s = 0.0;
  Prop1Terms terms;
};

Prop1Terms prop1_terms(double alpha, double t, double s);

// Largest-gap pair on the 64 x 64 grid t, s = 1e-3 * 500^{k/64}, k = 1..64,
// which is log-spaced over (1e-3, 0.5].
Prop1Witness prop1_grid_search(double alpha);

// The pair (1/2, 1/4) when its gap exceeds 1e-3, otherwise the grid maximum.
// Throws DomainError unless alpha in (0,1) U (1,inf), and Error if no pair
// beats 1e-3.
Prop1Witness prop1_refutation(double alpha);

struct Thm4Verdict {
  bool scalar = false;          // mean(xy) == mean(x) mean(y) within 1e-10 * scale
  bool spectral_scalar = false; // all eigenvalues in one cluster
  double mean_xy = 0.0;
  double mean_x_mean_y = 0.0;
  double gap() const noexcept { return mean_xy - mean_x_mean_y; }
};

// x_k = t_k^{-2 alpha}, y_k = t_k^{2 alpha / (1 - alpha)} over the eigenvalues
// t_k of T (with multiplicity). Throws ValidationError if T is not definite.
Thm4Verdict thm4_scalar_test(const PositiveOperator& T, double alpha);

}  // namespace qdiv
