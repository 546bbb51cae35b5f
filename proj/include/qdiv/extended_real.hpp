#pragma once

#include <string>

namespace qdiv {

// A real number or +inf. The product follows the measure-theoretic convention
// 0 * inf = 0. -inf is not representable; arithmetic that would produce it
// throws DomainError.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;

  // Throws DomainError for NaN or -inf; +inf maps to infinity().
  static ExtendedReal finite(double v);
  static constexpr ExtendedReal infinity() { return ExtendedReal(0.0, true); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  // Throws DomainError when infinite.
  double value() const;

  // +inf as std::numeric_limits<double>::infinity(), otherwise the value.
  double to_double() const noexcept;

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b);
  friend ExtendedReal operator*(ExtendedReal a, ExtendedReal b);
  ExtendedReal& operator+=(ExtendedReal other) { return *this = *this + other; }

  friend bool operator==(ExtendedReal a, ExtendedReal b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<(ExtendedReal a, ExtendedReal b) noexcept {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }

  // "inf" or the value printed with %.*f / %.*g.
  std::string to_fixed(int decimals) const;
  std::string to_general(int significant) const;

  // Accepts "inf" and any decimal float; throws DomainError otherwise.
  static ExtendedReal parse(const std::string& text);

 private:
  constexpr ExtendedReal(double v, bool inf) : value_(v), infinite_(inf) {}

  double value_ = 0.0;
  bool infinite_ = false;
};

// Categorical/numeric comparison used by the invariance checks: both infinite
// counts as equal, one infinite counts as a mismatch.
struct ExtendedDifference {
  bool category_mismatch = false;
  double abs_diff = 0.0;  // 0 when both infinite
};
ExtendedDifference compare(ExtendedReal a, ExtendedReal b);

}  // namespace qdiv
