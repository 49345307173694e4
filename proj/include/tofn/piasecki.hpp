#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "kosinski.hpp"
#include "ofn.hpp"
#include "polynomial.hpp"

namespace tofn {

enum class Star { add, sub, mul, div };

inline double apply(Star s, double x, double y) {
  switch (s) {
  case Star::add: return x + y;
  case Star::sub: return x - y;
  case Star::mul: return x * y;
  case Star::div: return x / y;
  }
  return 0.0;
}

/// Side values of a trapezoidal OFN at the ends of [0,1]:
/// a = up(0), b = up(1), c = down(1), d = down(0).
struct TrapezoidCorners {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  static TrapezoidCorners of(const TypedOfn& x) {
    const auto& t = x.tuple();
    return {t.b_up, t.a_up + t.b_up, t.a_dn + t.b_dn, t.b_dn};
  }

  friend bool operator==(const TrapezoidCorners&, const TrapezoidCorners&) = default;
};

/// num(alpha) / den(alpha); den never vanishes on [0,1].
struct RationalSide {
  Polynomial num;
  Polynomial den = Polynomial::constant(1.0);

  double operator()(double alpha) const { return num(alpha) / den(alpha); }

  bool is_polynomial() const { return den.is_constant(); }

  PiecewisePoly as_polynomial() const {
    if (!is_polynomial()) throw DomainError("side is a proper quotient of polynomials");
    return PiecewisePoly((1.0 / den.coefficient(0)) * num);
  }

  /// Monotone runs from the sign of num' den - num den'.
  std::vector<double> monotone_breaks() const {
    return roots::monotone_breaks_from_slope(num.derivative() * den - num * den.derivative(), 0.0, 1.0);
  }
};

enum class SideRule { product_form, constant };

struct PiaseckiResult {
  TrapezoidCorners corners;
  SideRule up_rule = SideRule::product_form;
  SideRule down_rule = SideRule::product_form;
  RationalSide up_fn;
  RationalSide down_fn;
};

namespace detail {

inline RationalSide combine_sides(Star s, const Polynomial& x, const Polynomial& y) {
  switch (s) {
  case Star::add: return {x + y};
  case Star::sub: return {x - y};
  case Star::mul: return {x * y};
  case Star::div: return {x, y};
  }
  return {};
}

inline void require_trapezoid(const TypedOfn& x) {
  if (x.tag() != "identity" && !x.is_rectangular())
    throw MixedTypeError("revised trapezoidal operations need identity-base operands, got '" + x.tag() + "'");
}

} // namespace detail

/// The revised corner-wise operation on trapezoidal OFNs. The first case
/// applies when b*b < c*c, or b*b = c*c and a*a <= d*d; the second otherwise.
inline PiaseckiResult p_op(Star star, const TypedOfn& x, const TypedOfn& y) {
  detail::require_trapezoid(x);
  detail::require_trapezoid(y);
  const TrapezoidCorners cx = TrapezoidCorners::of(x);
  const TrapezoidCorners cy = TrapezoidCorners::of(y);
  if (star == Star::div) {
    // A linear side with nonzero ends of equal sign has no zero inside [0,1].
    auto vanishes = [](double at0, double at1) { return at0 == 0.0 || at1 == 0.0 || (at0 < 0) != (at1 < 0); };
    if (vanishes(cy.a, cy.b) || vanishes(cy.d, cy.c)) throw DivisionByZero("divisor side vanishes on [0,1]");
  }

  const double aa = apply(star, cx.a, cy.a);
  const double bb = apply(star, cx.b, cy.b);
  const double cc = apply(star, cx.c, cy.c);
  const double dd = apply(star, cx.d, cy.d);
  const bool first = bb < cc || (bb == cc && aa <= dd);

  PiaseckiResult r;
  r.corners = {first ? std::min(aa, bb) : std::max(aa, bb), bb, cc, first ? std::max(dd, cc) : std::min(dd, cc)};

  const auto& tx = x.tuple();
  const auto& ty = y.tuple();
  if (r.corners.a != r.corners.b) {
    r.up_fn = detail::combine_sides(star, Polynomial::linear(tx.a_up, tx.b_up), Polynomial::linear(ty.a_up, ty.b_up));
  } else {
    r.up_rule = SideRule::constant;
    r.up_fn = {Polynomial::constant(r.corners.b)};
  }
  if (r.corners.c != r.corners.d) {
    r.down_fn = detail::combine_sides(star, Polynomial::linear(tx.a_dn, tx.b_dn), Polynomial::linear(ty.a_dn, ty.b_dn));
  } else {
    r.down_rule = SideRule::constant;
    r.down_fn = {Polynomial::constant(r.corners.c)};
  }
  return r;
}

struct ClosureReport {
  bool closed = false;
  KProprietyReport propriety;
  /// Set when a side is non-monotone: two levels sharing one value.
  std::optional<RepeatedValue> witness;
  std::optional<Side> witness_side;

  explicit operator bool() const noexcept { return closed; }
};

/// Whether the result is a proper OFN. Polynomial sides are judged by
/// k_is_proper; quotient sides by the same criteria on their rational form.
inline ClosureReport p_closure_check(const PiaseckiResult& r) {
  ClosureReport out;
  const auto up_runs = r.up_fn.monotone_breaks();
  const auto down_runs = r.down_fn.monotone_breaks();
  if (r.up_fn.is_polynomial() && r.down_fn.is_polynomial()) {
    out.propriety = k_is_proper(PiecewisePolyOfn{r.up_fn.as_polynomial(), r.down_fn.as_polynomial()});
  } else {
    auto min_gap = [&](bool up_on_top) {
      const RationalSide& hi = up_on_top ? r.up_fn : r.down_fn;
      const RationalSide& lo = up_on_top ? r.down_fn : r.up_fn;
      const RationalSide diff{hi.num * lo.den - lo.num * hi.den, hi.den * lo.den};
      double m = std::min(diff(0.0), diff(1.0));
      for (double a : diff.monotone_breaks()) m = std::min(m, diff(a));
      return m;
    };
    out.propriety = assess_sides(r.up_fn, r.down_fn, up_runs, down_runs, min_gap);
  }
  out.closed = out.propriety.proper;
  if (out.propriety.violation == KViolation::up_not_monotone) {
    out.witness = repeated_value(r.up_fn, up_runs);
    out.witness_side = Side::up;
  } else if (out.propriety.violation == KViolation::down_not_monotone) {
    out.witness = repeated_value(r.down_fn, down_runs);
    out.witness_side = Side::down;
  }
  return out;
}

} // namespace tofn
