#pragma once

#include "qdiv/extended_real.hpp"
#include "qdiv/operators.hpp"
#include "qdiv/scalar_function.hpp"

#include <vector>

namespace qdiv {

// Quantum f-divergence from the spectral double sum
//   S_f(A||B) = sum_a ( sum_{b > 0} b f(a/b) tr P_a Q_b + gamma a tr P_a Q_0 ),
// with 0 * inf = 0. When gamma = +inf the kernel term is infinite exactly when
// supp A is not inside supp B (tr A Q_0 > 0), which is decided by ranks.
// Throws DomainError when gamma is undeclared, gamma = -inf, or f(0) is needed
// and undeclared.
ExtendedReal f_divergence(const PositiveOperator& A, const PositiveOperator& B,
                          const ScalarFunctionSpec& f);

// Same quantity from <sqrt B, f(L_A R_{B^-1}) sqrt B>_HS, with f applied to the
// n^2 x n^2 superoperator by its Hermitian spectral calculus.
// Throws ValidationError when B is singular.
double f_divergence_superop(const PositiveOperator& A, const PositiveOperator& B,
                            const ScalarFunctionSpec& f);

// tr A (log A - log B) if supp A is inside supp B, +inf otherwise. Natural log.
ExtendedReal umegaki(const DensityOperator& A, const DensityOperator& B);

// (alpha-1)^-1 log tr A^alpha B^{1-alpha}, powers on supports.
// alpha < 1: +inf iff supports are orthogonal. alpha > 1: +inf unless supp A is inside supp B.
ExtendedReal renyi_traditional(const DensityOperator& A, const DensityOperator& B, double alpha);

// tr (B^s A B^s)^alpha with s = (1 - alpha) / (2 alpha), B^s taken on supp B.
// alpha > 1 and supp A not inside supp B gives +inf.
ExtendedReal sandwiched_core(const PositiveOperator& A, const PositiveOperator& B, double alpha);

// (alpha-1)^-1 log( sandwiched_core(A, B, alpha) / tr A ) for nonzero A, B.
ExtendedReal sandwiched_renyi(const PositiveOperator& A, const PositiveOperator& B, double alpha);

// tr g(f(B) A f(B)), extended to singular B by its eps -> 0 limit:
//  f -> 0 at 0+ : tr g(f(B0) A0 f(B0)) on supp B (A0, B0 compressions);
//  f -> inf at 0+: the same when supp A is inside supp B, +inf otherwise
//                  (requires g strictly increasing and unbounded).
// Requires g(0) = 0.
ExtendedReal d_fg(const PositiveOperator& A, const PositiveOperator& B,
                  const ScalarFunctionSpec& f, const ScalarFunctionSpec& g);

struct LimitProbe {
  std::vector<double> epsilons;
  std::vector<double> values;  // tr g(f(B + eps I) A f(B + eps I)); +inf if overflowed
  bool diverging = false;      // last value above cap and the tail is nondecreasing
  ExtendedReal estimate;       // +inf when diverging, else the last value
};

// Evaluates the eps-regularized D'_{f,g} along a decreasing schedule.
LimitProbe d_fg_limit_probe(const PositiveOperator& A, const PositiveOperator& B,
                            const ScalarFunctionSpec& f, const ScalarFunctionSpec& g,
                            const std::vector<double>& schedule, double cap = 1e12);

// Decade schedule 10^-first .. 10^-last.
std::vector<double> decade_schedule(int first, int last);

// Throws DomainError unless alpha in (0, 1) U (1, inf).
void require_renyi_alpha(double alpha);

}  // namespace qdiv
