#include "qdiv/scalar_function.hpp"

#include "qdiv/types.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace qdiv {

namespace {

constexpr int kGridPoints = 100;

std::vector<double> flag_grid() {
  std::vector<double> grid(kGridPoints);
  const double lo = std::log(1e-3);
  const double hi = std::log(1e3);
  for (int i = 0; i < kGridPoints; ++i) {
    grid[i] = std::exp(lo + (hi - lo) * i / (kGridPoints - 1));
  }
  return grid;
}

std::string fmt_param(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", p);
  return buf;
}

}  // namespace

ScalarFunctionSpec::ScalarFunctionSpec(Declaration decl) : decl_(std::move(decl)) {
  if (!decl_.evaluate) throw DomainError("ScalarFunctionSpec '" + decl_.name + "': no callable");
  if (decl_.domain == Domain::NonNegative && !decl_.value_at_zero) {
    throw DomainError("ScalarFunctionSpec '" + decl_.name +
                      "': domain includes 0 but value_at_zero is undeclared");
  }
  if (decl_.flags.strictly_increasing && decl_.flags.strictly_decreasing) {
    throw DomainError("ScalarFunctionSpec '" + decl_.name + "': both increasing and decreasing");
  }
  if (decl_.flags.strictly_convex && decl_.flags.strictly_concave) {
    throw DomainError("ScalarFunctionSpec '" + decl_.name + "': both convex and concave");
  }
  spot_check_flags();
}

double ScalarFunctionSpec::operator()(double t) const {
  if (std::isnan(t) || t < 0.0) {
    throw DomainError("ScalarFunctionSpec '" + decl_.name + "': argument " + fmt_param(t) +
                      " outside domain");
  }
  if (t == 0.0) {
    if (decl_.domain == Domain::Positive || !decl_.value_at_zero) {
      throw DomainError("ScalarFunctionSpec '" + decl_.name + "': undefined at 0");
    }
    return *decl_.value_at_zero;
  }
  return decl_.evaluate(t);
}

void ScalarFunctionSpec::spot_check_flags() const {
  const auto grid = flag_grid();
  std::vector<double> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(), decl_.evaluate);
  const auto& fl = decl_.flags;
  const auto fail = [&](const char* flag) {
    throw DomainError("ScalarFunctionSpec '" + decl_.name + "': declared flag '" + flag +
                      "' violated on the check grid");
  };

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (fl.strictly_increasing && !(values[i + 1] > values[i])) fail("strictly_increasing");
    if (fl.strictly_decreasing && !(values[i + 1] < values[i])) fail("strictly_decreasing");
  }
  for (std::size_t i = 0; i + 2 < grid.size(); ++i) {
    const double x = grid[i];
    const double y = grid[i + 2];
    const double mid = decl_.evaluate(0.5 * (x + y));
    const double avg = 0.5 * (values[i] + values[i + 2]);
    const double slack = 1e-12 * (std::abs(avg) + 1.0);
    if (fl.strictly_convex && mid > avg + slack) fail("strictly_convex");
    if (fl.strictly_concave && mid < avg - slack) fail("strictly_concave");
  }
  if (fl.injective) {
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("injective");
  }
  if (fl.unbounded_above) {
    const double a = decl_.evaluate(1.0);
    const double b = decl_.evaluate(1e3);
    const double c = decl_.evaluate(1e6);
    if (!(a < b && b < c)) fail("unbounded_above");
  }
}

namespace functions {

ScalarFunctionSpec power(double p) {
  ScalarFunctionSpec::Declaration d;
  d.name = "power:" + fmt_param(p);
  d.evaluate = [p](double t) { return std::pow(t, p); };
  if (p > 0.0) {
    d.domain = Domain::NonNegative;
    d.value_at_zero = 0.0;
    d.limit_at_zero = LimitAtZero::finite(0.0);
    d.flags.strictly_increasing = true;
    d.flags.injective = true;
    d.flags.unbounded_above = true;
    d.flags.strictly_convex = p > 1.0;
    d.flags.strictly_concave = p < 1.0;
  } else if (p < 0.0) {
    d.domain = Domain::Positive;
    d.limit_at_zero = LimitAtZero::plus_infinity();
    d.flags.strictly_decreasing = true;
    d.flags.strictly_convex = true;
    d.flags.injective = true;
  } else {
    d.domain = Domain::NonNegative;
    d.value_at_zero = 1.0;
    d.limit_at_zero = LimitAtZero::finite(1.0);
  }
  if (p < 1.0) {
    d.gamma = ExtendedReal::finite(0.0);
  } else if (p == 1.0) {
    d.gamma = ExtendedReal::finite(1.0);
  } else {
    d.gamma = ExtendedReal::infinity();
  }
  return ScalarFunctionSpec(std::move(d));
}

ScalarFunctionSpec xlogx() {
  ScalarFunctionSpec::Declaration d;
  d.name = "xlogx";
  d.evaluate = [](double t) { return t * std::log(t); };
  d.domain = Domain::NonNegative;
  d.value_at_zero = 0.0;
  d.limit_at_zero = LimitAtZero::finite(0.0);
  d.gamma = ExtendedReal::infinity();
  d.flags.strictly_convex = true;
  return ScalarFunctionSpec(std::move(d));
}

ScalarFunctionSpec linear(double c) {
  ScalarFunctionSpec::Declaration d;
  d.name = "linear:" + fmt_param(c);
  d.evaluate = [c](double t) { return c * (t - 1.0); };
  d.domain = Domain::NonNegative;
  d.value_at_zero = -c;
  d.limit_at_zero = LimitAtZero::finite(-c);
  d.gamma = ExtendedReal::finite(c);
  d.flags.strictly_increasing = c > 0.0;
  d.flags.strictly_decreasing = c < 0.0;
  d.flags.injective = c != 0.0;
  d.flags.unbounded_above = c > 0.0;
  return ScalarFunctionSpec(std::move(d));
}

ScalarFunctionSpec ratio() {
  ScalarFunctionSpec::Declaration d;
  d.name = "ratio";
  d.evaluate = [](double t) { return t / (1.0 + t); };
  d.domain = Domain::NonNegative;
  d.value_at_zero = 0.0;
  d.limit_at_zero = LimitAtZero::finite(0.0);
  d.gamma = ExtendedReal::finite(0.0);
  d.flags.strictly_increasing = true;
  d.flags.strictly_concave = true;
  d.flags.injective = true;
  return ScalarFunctionSpec(std::move(d));
}

ScalarFunctionSpec power_plus_linear(double p, double c) {
  if (!(p > 0.0) || p == 1.0) {
    throw DomainError("power_plus_linear: exponent must be positive and != 1");
  }
  ScalarFunctionSpec::Declaration d;
  d.name = "power_plus_linear:" + fmt_param(p) + ":" + fmt_param(c);
  d.evaluate = [p, c](double t) { return std::pow(t, p) + c * (t - 1.0); };
  d.domain = Domain::NonNegative;
  d.value_at_zero = -c;
  d.limit_at_zero = LimitAtZero::finite(-c);
  d.gamma = p < 1.0 ? ExtendedReal::finite(c) : ExtendedReal::infinity();
  return ScalarFunctionSpec(std::move(d));
}

}  // namespace functions

}  // namespace qdiv
