#include "qdiv/extended_real.hpp"

#include "qdiv/types.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace qdiv {

ExtendedReal ExtendedReal::finite(double v) {
  if (std::isnan(v)) throw DomainError("ExtendedReal: NaN is not an extended real");
  if (std::isinf(v)) {
    if (v < 0) throw DomainError("ExtendedReal: -inf is outside the supported codomain");
    return infinity();
  }
  return ExtendedReal(v, false);
}

double ExtendedReal::value() const {
  if (infinite_) throw DomainError("ExtendedReal: value() called on +inf");
  return value_;
}

double ExtendedReal::to_double() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
  if (a.infinite_ || b.infinite_) return ExtendedReal::infinity();
  return ExtendedReal::finite(a.value_ + b.value_);
}

ExtendedReal operator*(ExtendedReal a, ExtendedReal b) {
  if (!a.infinite_ && !b.infinite_) return ExtendedReal::finite(a.value_ * b.value_);
  const ExtendedReal& other = a.infinite_ ? b : a;
  if (other.infinite_) return ExtendedReal::infinity();
  if (other.value_ == 0.0) return ExtendedReal::finite(0.0);
  if (other.value_ < 0.0) throw DomainError("ExtendedReal: negative * inf would be -inf");
  return ExtendedReal::infinity();
}

std::string ExtendedReal::to_fixed(int decimals) const {
  if (infinite_) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value_);
  std::string out(buf);
  // "-0.000" is a rounding artifact of a value that is zero at this precision.
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string ExtendedReal::to_general(int significant) const {
  if (infinite_) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, value_);
  return buf;
}

ExtendedReal ExtendedReal::parse(const std::string& text) {
  if (text == "inf" || text == "+inf") return infinity();
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw DomainError("ExtendedReal: cannot parse '" + text + "'");
  }
  return finite(v);
}

ExtendedDifference compare(ExtendedReal a, ExtendedReal b) {
  if (a.is_infinite() != b.is_infinite()) return {true, std::numeric_limits<double>::infinity()};
  if (a.is_infinite()) return {false, 0.0};
  return {false, std::abs(a.value() - b.value())};
}

}  // namespace qdiv
