#include "qdiv/lemmas.hpp"

#include "qdiv/divergence.hpp"
#include "qdiv/linalg.hpp"
#include "qdiv/sampling.hpp"
#include "qdiv/spectral.hpp"

#include <cmath>
#include <vector>

namespace qdiv {

namespace {

constexpr double kProbeDelta = 1e-6;
constexpr double kOrderTolerance = 1e-10;
constexpr double kViolationTolerance = 1e-10;
constexpr double kThm4Tolerance = 1e-10;
constexpr double kProp1Threshold = 1e-3;
constexpr int kProp1GridSize = 64;

std::vector<double> probability_vector(int n, SeededRng& rng) {
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& x : p) total += (x = rng.exponential());
  for (auto& x : p) x /= total;
  return p;
}

}  // namespace

double trace_similarity_check(const PositiveOperator& A, const PositiveOperator& B,
                              const ScalarFunctionSpec& h) {
  if (A.dim() != B.dim()) throw DimensionError("trace_similarity_check: dimension mismatch");
  const Tolerances& tol = A.tolerances();
  // With X = B sqrt(A): BAB = X X* and sqrt(A) B^2 sqrt(A) = X* X.
  const ComplexMatrix X = B.matrix() * A.sqrt();
  const double lhs = trace_fn(gram(X), h, tol);
  const double rhs = trace_fn(gram(X.adjoint()), h, tol);
  return std::abs(lhs - rhs);
}

OrderVerdict order_dominance_test(const PositiveOperator& B, const PositiveOperator& C,
                                  const ScalarFunctionSpec& h, std::size_t n_samples,
                                  std::uint64_t seed) {
  if (B.dim() != C.dim()) throw DimensionError("order_dominance_test: dimension mismatch");
  if (!h.flags().strictly_increasing) {
    throw DomainError("order_dominance_test: h must be strictly increasing ('" + h.name() + "')");
  }
  if (!h.value_at_zero() || *h.value_at_zero() != 0.0) {
    throw DomainError("order_dominance_test: h(0) = 0 is required ('" + h.name() + "')");
  }
  const int n = B.dim();
  const Tolerances& tol = B.tolerances();
  const ComplexMatrix& b = B.matrix();
  const ComplexMatrix& c = C.matrix();
  const ComplexMatrix b2 = b * b;
  const ComplexMatrix c2 = c * c;

  OrderVerdict out;
  const EigenDecomposition gap = eig_hermitian(hermitian_part(c2 - b2));
  const double scale = std::max({1.0, hermitian_norm2(hermitian_part(b2)),
                                 hermitian_norm2(hermitian_part(c2))});
  out.min_gap_eigenvalue = gap.values(0);
  out.spectral_le = out.min_gap_eigenvalue >= -kOrderTolerance * scale;

  const ComplexMatrix I = ComplexMatrix::Identity(n, n);
  bool first = true;
  const auto probe = [&](const ComplexMatrix& A) {
    const ComplexMatrix sqrt_a = PositiveOperator(A).sqrt();
    const double lhs = trace_fn(gram(b * sqrt_a), h, tol);
    const double rhs = trace_fn(gram(c * sqrt_a), h, tol);
    const double diff = lhs - rhs;
    ++out.probes;
    if (first || diff > out.max_violation) out.max_violation = diff;
    first = false;
    const double bound = kViolationTolerance * std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (diff > bound && !out.counterexample) out.counterexample = A;
  };

  // Directed probes: x x* + delta I along directions where C^2 - B^2 < 0.
  for (Eigen::Index k = 0; k < gap.values.size(); ++k) {
    if (gap.values(k) >= -kOrderTolerance * scale) break;
    const ComplexVector x = gap.vectors.col(k);
    probe(rank_one(x, x) + kProbeDelta * I);
  }

  SeededRng rng(seed);
  for (std::size_t k = 0; k < n_samples && !out.counterexample; ++k) {
    if (k % 2 == 0) {
      const ComplexVector x = random_unit_vector(n, rng);
      probe(rank_one(x, x) + kProbeDelta * I);
    } else {
      probe(random_positive_definite(n, 1e3, rng).matrix());
    }
  }
  return out;
}

double functional_eq_residual(const ScalarFunctionSpec& f, int n, std::size_t n_samples,
                              std::uint64_t seed) {
  if (n < 2) throw DomainError("functional_eq_residual: n must be >= 2");
  SeededRng rng(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < n_samples; ++k) {
    const auto a = probability_vector(n, rng);
    const auto b = probability_vector(n, rng);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += b[i] * f(a[i] / b[i]);
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

Prop1Terms prop1_terms(double alpha, double t, double s) {
  require_renyi_alpha(alpha);
  if (!(t > 0.0) || !(s > 0.0)) throw DomainError("prop1_terms: t and s must be positive");
  const double p = 1.0 - alpha;
  const double q = p / alpha;
  Prop1Terms out;
  out.lhs = 0.5 * (std::pow(t, p) + std::pow(s, p));
  out.rhs = std::pow(0.5 * (std::pow(t, q) + std::pow(s, q)), alpha);
  return out;
}

Prop1Witness prop1_grid_search(double alpha) {
  require_renyi_alpha(alpha);
  std::vector<double> grid(kProp1GridSize);
  for (int k = 0; k < kProp1GridSize; ++k) {
    grid[k] = 1e-3 * std::pow(500.0, static_cast<double>(k + 1) / kProp1GridSize);
  }
  grid.back() = 0.5;
  Prop1Witness best;
  bool have = false;
  for (const double t : grid) {
    for (const double s : grid) {
      const Prop1Terms terms = prop1_terms(alpha, t, s);
      if (!have || terms.gap() > best.terms.gap()) {
        best = {t, s, terms};
        have = true;
      }
    }
  }
  return best;
}

Prop1Witness prop1_refutation(double alpha) {
  const Prop1Witness anchor{0.5, 0.25, prop1_terms(alpha, 0.5, 0.25)};
  if (anchor.terms.gap() > kProp1Threshold) return anchor;
  const Prop1Witness best = prop1_grid_search(alpha);
  if (!(best.terms.gap() > kProp1Threshold)) {
    throw Error("prop1_refutation: no pair with gap above 1e-3 on the grid");
  }
  return best;
}

Thm4Verdict thm4_scalar_test(const PositiveOperator& T, double alpha) {
  require_renyi_alpha(alpha);
  if (!T.definite()) throw ValidationError("thm4_scalar_test: T must be positive definite");
  const EigenDecomposition eig = eig_hermitian(T.matrix());
  const auto n = static_cast<double>(eig.values.size());
  const double px = -2.0 * alpha;
  const double py = 2.0 * alpha / (1.0 - alpha);
  double sx = 0.0, sy = 0.0, sxy = 0.0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const double t = eig.values(k);
    const double x = std::pow(t, px);
    const double y = std::pow(t, py);
    sx += x;
    sy += y;
    sxy += x * y;
  }
  Thm4Verdict out;
  out.mean_xy = sxy / n;
  out.mean_x_mean_y = (sx / n) * (sy / n);
  const double scale = std::max(std::abs(out.mean_xy), std::abs(out.mean_x_mean_y));
  out.scalar = std::abs(out.gap()) <= kThm4Tolerance * scale;
  out.spectral_scalar = T.spectrum().clusters.size() == 1;
  return out;
}

}  // namespace qdiv
