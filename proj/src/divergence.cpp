#include "qdiv/divergence.hpp"

#include "qdiv/linalg.hpp"
#include "qdiv/superop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qdiv {

namespace {

constexpr double kImaginaryTraceTolerance = 1e-10;

// tr P Q for Hermitian P, Q: real by construction, checked.
double real_trace_product(const ComplexMatrix& P, const ComplexMatrix& Q) {
  const Complex z = hs_inner(P, Q);
  if (std::abs(z.imag()) > kImaginaryTraceTolerance) {
    throw Error("trace of a product of Hermitian matrices has imaginary part " +
                std::to_string(z.imag()));
  }
  return z.real();
}

// Eigenvalue as used by the spectral sums: anything at or below the support
// threshold is exactly zero.
double snapped(double lambda, const SpectralDecomposition& spec, const Tolerances& tol) {
  return lambda <= tol.supp * spec.max_eigenvalue() ? 0.0 : lambda;
}

void require_same(const PositiveOperator& A, const PositiveOperator& B, const char* what) {
  if (A.dim() != B.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(A.dim()) +
                         " vs " + std::to_string(B.dim()) + ")");
  }
}

ExtendedReal scaled_log(double value, double alpha) {
  if (!(value > 0.0)) {
    // log 0 = -inf; divided by alpha - 1 < 0 this is +inf.
    if (alpha < 1.0) return ExtendedReal::infinity();
    throw DomainError("log of a non-positive trace with alpha > 1");
  }
  return ExtendedReal::finite(std::log(value) / (alpha - 1.0));
}

}  // namespace

void require_renyi_alpha(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    throw DomainError("alpha must lie in (0,1) U (1,inf)");
  }
}

std::vector<double> decade_schedule(int first, int last) {
  std::vector<double> out;
  for (int k = first; k <= last; ++k) out.push_back(std::pow(10.0, -k));
  return out;
}

ExtendedReal f_divergence(const PositiveOperator& A, const PositiveOperator& B,
                          const ScalarFunctionSpec& f) {
  require_same(A, B, "f_divergence");
  if (!f.gamma()) {
    throw DomainError("f_divergence: gamma = lim f(t)/t is undeclared for '" + f.name() + "'");
  }
  const ExtendedReal gamma = *f.gamma();
  const Tolerances& tol = A.tolerances();

  double acc = 0.0;
  for (const auto& pa : A.spectrum().clusters) {
    const double a = snapped(pa.eigenvalue, A.spectrum(), tol);
    for (const auto& qb : B.spectrum().clusters) {
      const double b = snapped(qb.eigenvalue, B.spectrum(), tol);
      const double overlap = real_trace_product(pa.projection, qb.projection);
      if (b > 0.0) {
        acc += b * f(a / b) * overlap;
      } else if (gamma.is_finite()) {
        acc += gamma.value() * a * overlap;
      }
    }
  }
  // gamma = +inf: sum_a gamma a tr P_a Q_0 = gamma tr(A Q_0), nonzero iff supp A leaves supp B.
  if (gamma.is_infinite() && !support_contained(A, B)) return ExtendedReal::infinity();
  return ExtendedReal::finite(acc);
}

double f_divergence_superop(const PositiveOperator& A, const PositiveOperator& B,
                            const ScalarFunctionSpec& f) {
  require_same(A, B, "f_divergence_superop");
  if (!B.definite()) throw ValidationError("f_divergence_superop: B must be invertible");
  const Tolerances& tol = A.tolerances();
  const ComplexMatrix b_inv = support_power(B.spectrum(), -1.0, tol);
  const ComplexMatrix sqrt_b = support_power(B.spectrum(), 0.5, tol);

  // kron(B^-T, A) is Hermitian in the vec inner product, which is the HS product.
  const Superoperator lr = superop_lr(A.matrix(), b_inv);
  const ComplexMatrix f_lr = apply_spectral_fn(hermitian_part(lr.matrix), f, tol);
  const ComplexMatrix image = unvec(f_lr * vec(sqrt_b), A.dim());
  return hs_inner(sqrt_b, image).real();
}

ExtendedReal umegaki(const DensityOperator& A, const DensityOperator& B) {
  require_same(A, B, "umegaki");
  if (!support_contained(A, B)) return ExtendedReal::infinity();
  const Tolerances& tol = A.tolerances();
  double entropy_term = 0.0;
  for (const auto& pa : A.spectrum().clusters) {
    const double a = snapped(pa.eigenvalue, A.spectrum(), tol);
    if (a > 0.0) entropy_term += pa.multiplicity * a * std::log(a);
  }
  double cross_term = 0.0;
  for (const auto& qb : B.spectrum().clusters) {
    const double b = snapped(qb.eigenvalue, B.spectrum(), tol);
    if (b > 0.0) cross_term += std::log(b) * real_trace_product(A.matrix(), qb.projection);
  }
  return ExtendedReal::finite(entropy_term - cross_term);
}

ExtendedReal renyi_traditional(const DensityOperator& A, const DensityOperator& B, double alpha) {
  require_same(A, B, "renyi_traditional");
  require_renyi_alpha(alpha);
  if (alpha < 1.0 && supports_orthogonal(A, B)) return ExtendedReal::infinity();
  if (alpha > 1.0 && !support_contained(A, B)) return ExtendedReal::infinity();
  const Tolerances& tol = A.tolerances();
  const ComplexMatrix a_pow = support_power(A.spectrum(), alpha, tol);
  const ComplexMatrix b_pow = support_power(B.spectrum(), 1.0 - alpha, tol);
  const double t = real_trace_product(a_pow, b_pow);
  return scaled_log(t, alpha);
}

ExtendedReal sandwiched_core(const PositiveOperator& A, const PositiveOperator& B, double alpha) {
  require_same(A, B, "sandwiched_core");
  require_renyi_alpha(alpha);
  if (alpha > 1.0 && !support_contained(A, B)) return ExtendedReal::infinity();
  const Tolerances& tol = A.tolerances();
  const double s = (1.0 - alpha) / (2.0 * alpha);
  const ComplexMatrix b_s = support_power(B.spectrum(), s, tol);
  const ComplexMatrix inner = gram(b_s * A.sqrt());
  return ExtendedReal::finite(trace_fn(inner, functions::power(alpha), tol));
}

ExtendedReal sandwiched_renyi(const PositiveOperator& A, const PositiveOperator& B, double alpha) {
  require_same(A, B, "sandwiched_renyi");
  require_renyi_alpha(alpha);
  if (A.is_zero() || B.is_zero()) {
    throw ValidationError("sandwiched_renyi: operands must be nonzero");
  }
  if (alpha < 1.0 && supports_orthogonal(A, B)) return ExtendedReal::infinity();
  const ExtendedReal core = sandwiched_core(A, B, alpha);
  if (core.is_infinite()) return core;
  return scaled_log(core.value() / A.trace(), alpha);
}

ExtendedReal d_fg(const PositiveOperator& A, const PositiveOperator& B,
                  const ScalarFunctionSpec& f, const ScalarFunctionSpec& g) {
  require_same(A, B, "d_fg");
  if (!g.value_at_zero() || *g.value_at_zero() != 0.0) {
    throw DomainError("d_fg: g(0) = 0 is required ('" + g.name() + "')");
  }
  const auto& limit = f.limit_at_zero();
  if (limit && limit->infinite &&
      !(g.flags().strictly_increasing && g.flags().unbounded_above)) {
    throw DomainError("d_fg: f -> inf at 0+ requires g strictly increasing with g -> inf");
  }
  const Tolerances& tol = A.tolerances();

  if (B.definite()) {
    const ComplexMatrix f_b = apply_spectral_fn(B.spectrum(), f, tol);
    return ExtendedReal::finite(trace_fn(gram(f_b * A.sqrt()), g, tol));
  }
  if (!limit) {
    throw DomainError("d_fg: singular B needs the limit of '" + f.name() + "' at 0+");
  }
  if (!limit->infinite && limit->value != 0.0) {
    throw DomainError("d_fg: singular B needs f -> 0 or f -> inf at 0+");
  }
  if (limit->infinite && !support_contained(A, B)) return ExtendedReal::infinity();
  if (B.rank() == 0) return ExtendedReal::finite(0.0);

  // Compress to supp B: f(B0) A0 f(B0) on supp B, with A0 = V* A V.
  const ComplexMatrix& basis = B.support_basis();
  const ComplexMatrix b0 = hermitian_part(basis.adjoint() * B.matrix() * basis);
  const ComplexMatrix f_b0 = apply_spectral_fn(cluster_spectrum(b0, tol.spec), f, tol);
  return ExtendedReal::finite(trace_fn(gram(f_b0 * basis.adjoint() * A.sqrt()), g, tol));
}

LimitProbe d_fg_limit_probe(const PositiveOperator& A, const PositiveOperator& B,
                            const ScalarFunctionSpec& f, const ScalarFunctionSpec& g,
                            const std::vector<double>& schedule, double cap) {
  require_same(A, B, "d_fg_limit_probe");
  const Tolerances& tol = A.tolerances();
  const Eigen::Index n = A.dim();
  const ComplexMatrix sqrt_a = A.sqrt();
  LimitProbe out;
  for (const double eps : schedule) {
    if (!(eps > 0.0)) throw DomainError("d_fg_limit_probe: schedule entries must be positive");
    const ComplexMatrix shifted = B.matrix() + eps * ComplexMatrix::Identity(n, n);
    const auto spec = cluster_spectrum(shifted, tol.spec);
    const ComplexMatrix f_b = apply_spectral_fn(spec, [&](double t) { return f(t); });
    double v = trace_fn(gram(f_b * sqrt_a), g, tol);
    if (!std::isfinite(v)) v = std::numeric_limits<double>::infinity();
    out.epsilons.push_back(eps);
    out.values.push_back(v);
  }
  if (out.values.empty()) return out;

  const double last = out.values.back();
  const std::size_t tail = std::min<std::size_t>(3, out.values.size());
  bool nondecreasing = true;
  for (std::size_t k = out.values.size() - tail + 1; k < out.values.size(); ++k) {
    if (out.values[k] < out.values[k - 1]) nondecreasing = false;
  }
  out.diverging = std::isinf(last) || (last > cap && nondecreasing);
  out.estimate = out.diverging ? ExtendedReal::infinity() : ExtendedReal::finite(last);
  return out;
}

}  // namespace qdiv
