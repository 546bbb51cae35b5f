#pragma once

#include "qdiv/extended_real.hpp"

#include <functional>
#include <optional>
#include <string>

namespace qdiv {

enum class Domain {
  NonNegative,  // [0, inf)
  Positive,     // (0, inf)
};

// Behaviour of f(t) as t -> 0+.
struct LimitAtZero {
  bool infinite = false;
  double value = 0.0;  // meaningful when !infinite

  static LimitAtZero finite(double v) { return {false, v}; }
  static LimitAtZero plus_infinity() { return {true, 0.0}; }
};

struct FunctionFlags {
  bool strictly_increasing = false;
  bool strictly_decreasing = false;
  bool strictly_convex = false;
  bool strictly_concave = false;
  bool injective = false;
  bool unbounded_above = false;  // f(t) -> +inf as t -> inf
};

// A real function on [0, inf) or (0, inf) together with the facts the
// divergence formulas need but cannot safely infer from a callable: its value
// or limit at 0, the slope at infinity gamma = lim f(t)/t, and shape flags.
//
// Declared flags are spot-checked on a 100-point grid on construction;
// a violated flag raises DomainError.
class ScalarFunctionSpec {
 public:
  struct Declaration {
    std::string name;
    std::function<double(double)> evaluate;
    Domain domain = Domain::Positive;
    std::optional<double> value_at_zero;
    std::optional<LimitAtZero> limit_at_zero;
    std::optional<ExtendedReal> gamma;
    FunctionFlags flags;
  };

  explicit ScalarFunctionSpec(Declaration decl);

  // f(t). At t == 0 uses the declared value_at_zero; throws DomainError when
  // t is outside the domain or f(0) is needed but undeclared.
  double operator()(double t) const;

  bool defined_at_zero() const noexcept { return decl_.value_at_zero.has_value(); }

  const std::string& name() const noexcept { return decl_.name; }
  Domain domain() const noexcept { return decl_.domain; }
  const std::optional<double>& value_at_zero() const noexcept { return decl_.value_at_zero; }
  const std::optional<LimitAtZero>& limit_at_zero() const noexcept { return decl_.limit_at_zero; }
  const std::optional<ExtendedReal>& gamma() const noexcept { return decl_.gamma; }
  const FunctionFlags& flags() const noexcept { return decl_.flags; }

 private:
  void spot_check_flags() const;

  Declaration decl_;
};

// Built-in families. Each declares its own domain data and flags.
namespace functions {

// t^p. p > 0: defined at 0 with f(0) = 0. p < 0: defined on (0, inf), -> inf at 0+.
// p == 0 is the constant 1.
ScalarFunctionSpec power(double p);

// t log t with f(0) = 0.
ScalarFunctionSpec xlogx();

// c (t - 1).
ScalarFunctionSpec linear(double c);

// t / (1 + t).
ScalarFunctionSpec ratio();

// t^p + c (t - 1), p > 0, p != 1. Used to exhibit nonzero residuals of the
// functional equation sum_k b_k f(a_k / b_k) = 0.
ScalarFunctionSpec power_plus_linear(double p, double c);

}  // namespace functions

}  // namespace qdiv
