#pragma once

#include <cmath>
#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "base.hpp"
#include "errors.hpp"
#include "extended_real.hpp"

namespace tofn {

/// The coefficients (a_up, b_up, a_dn, b_dn) of the sides a_up*h + b_up and a_dn*h + b_dn.
struct EssentialTuple {
  double a_up = 0.0;
  double b_up = 0.0;
  double a_dn = 0.0;
  double b_dn = 0.0;

  bool is_finite() const noexcept {
    return std::isfinite(a_up) && std::isfinite(b_up) && std::isfinite(a_dn) && std::isfinite(b_dn);
  }

  friend bool operator==(const EssentialTuple&, const EssentialTuple&) = default;
  friend auto operator<=>(const EssentialTuple&, const EssentialTuple&) = default;

  friend std::ostream& operator<<(std::ostream& os, const EssentialTuple& t) {
    return os << '(' << t.a_up << ", " << t.b_up << ", " << t.a_dn << ", " << t.b_dn << ')';
  }
};

enum class Side { up, down };
enum class Orientation { increasing, decreasing, degenerate };
enum class SignClass { positive, negative, neither };

inline const char* to_string(Orientation o) {
  switch (o) {
  case Orientation::increasing: return "increasing";
  case Orientation::decreasing: return "decreasing";
  case Orientation::degenerate: return "degenerate";
  }
  return "?";
}

inline const char* to_string(SignClass s) {
  switch (s) {
  case SignClass::positive: return "positive";
  case SignClass::negative: return "negative";
  case SignClass::neither: return "neither";
  }
  return "?";
}

/// An ordered fuzzy number of type h: a base function plus its essential tuple.
///
/// A tuple with a_up = a_dn = 0 is rectangular and belongs to every typed ring;
/// arithmetic with it adopts the other operand's base.
class TypedOfn {
public:
  TypedOfn(BaseRef base, EssentialTuple tuple) : base_(std::move(base)), tuple_(tuple) {
    if (!base_) throw DomainError("typed OFN without a base function");
    if (!tuple_.is_finite()) throw DomainError("essential tuple components must be finite");
  }

  const BaseFunction& base() const noexcept { return *base_; }
  const BaseRef& base_ref() const noexcept { return base_; }
  const std::string& tag() const noexcept { return base_->tag; }
  const EssentialTuple& tuple() const noexcept { return tuple_; }

  bool is_rectangular() const noexcept { return tuple_.a_up == 0.0 && tuple_.a_dn == 0.0; }

  double coefficient(Side s) const noexcept { return s == Side::up ? tuple_.a_up : tuple_.a_dn; }
  double offset(Side s) const noexcept { return s == Side::up ? tuple_.b_up : tuple_.b_dn; }

  friend bool operator==(const TypedOfn& x, const TypedOfn& y) {
    return x.tag() == y.tag() && x.tuple_ == y.tuple_;
  }

  friend std::ostream& operator<<(std::ostream& os, const TypedOfn& x) { return os << x.tag() << x.tuple_; }

private:
  BaseRef base_;
  EssentialTuple tuple_;
};

inline TypedOfn trapezoid(double a_up, double b_up, double a_dn, double b_dn) {
  return {bases::identity(), {a_up, b_up, a_dn, b_dn}};
}
inline TypedOfn gaussian(double a_up, double b_up, double a_dn, double b_dn) {
  return {bases::gaussian(), {a_up, b_up, a_dn, b_dn}};
}
inline TypedOfn exponential(double a_up, double b_up, double a_dn, double b_dn) {
  return {bases::exponential(), {a_up, b_up, a_dn, b_dn}};
}
inline TypedOfn sqrt_typed(double a_up, double b_up, double a_dn, double b_dn) {
  return {bases::sqrt(), {a_up, b_up, a_dn, b_dn}};
}
inline TypedOfn rectangular(double b_up, double b_dn, BaseRef base = bases::identity()) {
  return {std::move(base), {0.0, b_up, 0.0, b_dn}};
}
inline TypedOfn crisp(double v, BaseRef base = bases::identity()) { return rectangular(v, v, std::move(base)); }

inline ExtendedReal side_eval(const TypedOfn& x, Side which, double alpha) {
  return affine(x.coefficient(which), eval_h(x.base(), alpha), x.offset(which));
}

inline Interval level_set(const TypedOfn& x, double alpha) {
  return Interval::hull(side_eval(x, Side::up, alpha), side_eval(x, Side::down, alpha));
}

/// Closure of the range of one side over alpha in [0,1], including the alpha -> 0+ limit.
inline Interval side_range(const TypedOfn& x, Side which) {
  return Interval::hull(side_eval(x, which, 0.0), side_eval(x, which, 1.0));
}

inline Interval support(const TypedOfn& x) {
  const Interval up = side_range(x, Side::up);
  const Interval dn = side_range(x, Side::down);
  return {min(up.lo, dn.lo), max(up.hi, dn.hi)};
}

/// Orientation read off near alpha = 0. For unbounded bases the side with the
/// dominant coefficient wins; ties fall through to the constant terms.
inline Orientation orientation(const TypedOfn& x) {
  const auto& t = x.tuple();
  auto from_order = [](std::partial_ordering c) {
    if (c < 0) return Orientation::increasing;
    if (c > 0) return Orientation::decreasing;
    return Orientation::degenerate;
  };
  if (x.base().bounded()) {
    const auto at0 = side_eval(x, Side::up, 0.0) <=> side_eval(x, Side::down, 0.0);
    if (at0 != 0) return from_order(at0);
    return from_order(side_eval(x, Side::up, 1.0) <=> side_eval(x, Side::down, 1.0));
  }
  const double s = x.base().range_at_0.is_pos_infinity() ? 1.0 : -1.0;
  const auto lead = (s * t.a_up) <=> (s * t.a_dn);
  if (lead != 0) return from_order(lead);
  return from_order(t.b_up <=> t.b_dn);
}

inline SignClass sign_class(const TypedOfn& x) {
  const Interval s = support(x);
  if (s.lo > ExtendedReal(0.0)) return SignClass::positive;
  if (s.hi < ExtendedReal(0.0)) return SignClass::negative;
  return SignClass::neither;
}

namespace detail {

inline const BaseRef& common_base(const TypedOfn& x, const TypedOfn& y) {
  if (x.tag() == y.tag()) return x.base_ref();
  if (x.is_rectangular()) return y.base_ref();
  if (y.is_rectangular()) return x.base_ref();
  throw MixedTypeError("arithmetic between '" + x.tag() + "' and '" + y.tag() + "' OFNs is not defined");
}

template <class Op>
TypedOfn componentwise(const TypedOfn& x, const TypedOfn& y, Op op) {
  const BaseRef& base = common_base(x, y);
  const auto& p = x.tuple();
  const auto& q = y.tuple();
  return {base, {op(p.a_up, q.a_up), op(p.b_up, q.b_up), op(p.a_dn, q.a_dn), op(p.b_dn, q.b_dn)}};
}

} // namespace detail

inline TypedOfn add(const TypedOfn& x, const TypedOfn& y) {
  return detail::componentwise(x, y, [](double u, double v) { return u + v; });
}

inline TypedOfn sub(const TypedOfn& x, const TypedOfn& y) {
  return detail::componentwise(x, y, [](double u, double v) { return u - v; });
}

inline TypedOfn mul(const TypedOfn& x, const TypedOfn& y) {
  return detail::componentwise(x, y, [](double u, double v) { return u * v; });
}

/// Componentwise quotient; every component of the divisor must be nonzero.
inline TypedOfn div(const TypedOfn& x, const TypedOfn& y) {
  const auto& q = y.tuple();
  if (q.a_up == 0.0 || q.b_up == 0.0 || q.a_dn == 0.0 || q.b_dn == 0.0)
    throw DivisionByZero("divisor tuple has a zero component");
  return detail::componentwise(x, y, [](double u, double v) { return u / v; });
}

inline TypedOfn scalar_mul(double r, const TypedOfn& x) {
  const auto& t = x.tuple();
  return {x.base_ref(), {r * t.a_up, r * t.b_up, r * t.a_dn, r * t.b_dn}};
}

inline TypedOfn neg(const TypedOfn& x) { return scalar_mul(-1.0, x); }

inline TypedOfn operator+(const TypedOfn& x, const TypedOfn& y) { return add(x, y); }
inline TypedOfn operator-(const TypedOfn& x, const TypedOfn& y) { return sub(x, y); }
inline TypedOfn operator*(const TypedOfn& x, const TypedOfn& y) { return mul(x, y); }
inline TypedOfn operator/(const TypedOfn& x, const TypedOfn& y) { return div(x, y); }
inline TypedOfn operator-(const TypedOfn& x) { return neg(x); }
inline TypedOfn operator*(double r, const TypedOfn& x) { return scalar_mul(r, x); }

} // namespace tofn
