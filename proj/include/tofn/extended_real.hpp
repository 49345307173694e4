#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>

#include "errors.hpp"

namespace tofn {

/// A real number or a signed infinity. NaN is never representable.
class ExtendedReal {
public:
  constexpr ExtendedReal() = default;

  // Implicit so that finite doubles flow naturally into side values and intervals.
  ExtendedReal(double v) : value_(v) {
    if (std::isnan(v)) throw DomainError("NaN is not an extended real");
  }

  static ExtendedReal pos_infinity() { return ExtendedReal(std::numeric_limits<double>::infinity()); }
  static ExtendedReal neg_infinity() { return ExtendedReal(-std::numeric_limits<double>::infinity()); }

  bool is_finite() const noexcept { return std::isfinite(value_); }
  bool is_pos_infinity() const noexcept { return std::isinf(value_) && value_ > 0; }
  bool is_neg_infinity() const noexcept { return std::isinf(value_) && value_ < 0; }

  /// The underlying double, which is +/-inf for the infinite elements.
  double value() const noexcept { return value_; }

  double finite_value() const {
    if (!is_finite()) throw DomainError("extended real is infinite");
    return value_;
  }

  friend bool operator==(ExtendedReal, ExtendedReal) = default;
  friend std::partial_ordering operator<=>(ExtendedReal x, ExtendedReal y) { return x.value_ <=> y.value_; }

  friend ExtendedReal operator-(ExtendedReal x) { return ExtendedReal(-x.value_); }

  friend std::ostream& operator<<(std::ostream& os, ExtendedReal x) {
    if (x.is_pos_infinity()) return os << "inf";
    if (x.is_neg_infinity()) return os << "-inf";
    return os << x.value_;
  }

private:
  double value_ = 0.0;
};

/// a*h + b where a zero coefficient yields b even when h is infinite.
inline ExtendedReal affine(double a, ExtendedReal h, double b) {
  if (a == 0.0) return ExtendedReal(b);
  if (h.is_finite()) return ExtendedReal(a * h.value() + b);
  const bool positive = (a > 0) == h.is_pos_infinity();
  return positive ? ExtendedReal::pos_infinity() : ExtendedReal::neg_infinity();
}

inline ExtendedReal min(ExtendedReal x, ExtendedReal y) { return y < x ? y : x; }
inline ExtendedReal max(ExtendedReal x, ExtendedReal y) { return x < y ? y : x; }

/// Closed interval [lo, hi] over the extended reals.
struct Interval {
  ExtendedReal lo;
  ExtendedReal hi;

  Interval() = default;
  Interval(ExtendedReal l, ExtendedReal h) : lo(l), hi(h) {
    if (hi < lo) throw DomainError("interval with lo > hi");
  }

  static Interval hull(ExtendedReal x, ExtendedReal y) { return Interval(min(x, y), max(x, y)); }

  bool contains(ExtendedReal x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool is_point() const { return lo == hi; }

  friend bool operator==(const Interval&, const Interval&) = default;

  /// Minkowski sum. Opposite infinities cannot arise since lo <= hi on both sides.
  friend Interval operator+(const Interval& x, const Interval& y) {
    return Interval(ExtendedReal(x.lo.value() + y.lo.value()), ExtendedReal(x.hi.value() + y.hi.value()));
  }

  friend std::ostream& operator<<(std::ostream& os, const Interval& i) {
    return os << '[' << i.lo << ", " << i.hi << ']';
  }
};

} // namespace tofn
