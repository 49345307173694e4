#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include "errors.hpp"
#include "ofn.hpp"
#include "polynomial.hpp"

namespace tofn {

/// General ordered fuzzy number with piecewise-polynomial sides on [0,1].
struct PiecewisePolyOfn {
  PiecewisePoly up;
  PiecewisePoly down;

  friend bool operator==(const PiecewisePolyOfn&, const PiecewisePolyOfn&) = default;
};

/// Embeds an identity-base typed OFN as single-piece linear sides.
inline PiecewisePolyOfn to_piecewise(const TypedOfn& x) {
  if (x.tag() != "identity" && !x.is_rectangular())
    throw MixedTypeError("only trapezoidal typed OFNs have polynomial sides");
  const auto& t = x.tuple();
  return {Polynomial::linear(t.a_up, t.b_up), Polynomial::linear(t.a_dn, t.b_dn)};
}

enum class KStar { add, sub, mul };

/// Side-by-side arithmetic on the function pairs. Division is not offered:
/// quotients leave the polynomial representation.
inline PiecewisePolyOfn k_op(KStar star, const PiecewisePolyOfn& x, const PiecewisePolyOfn& y) {
  auto side = [star](const PiecewisePoly& f, const PiecewisePoly& g) {
    switch (star) {
    case KStar::add: return PiecewisePoly::combine(f, g, [](const Polynomial& p, const Polynomial& q) { return p + q; });
    case KStar::sub: return PiecewisePoly::combine(f, g, [](const Polynomial& p, const Polynomial& q) { return p - q; });
    case KStar::mul: break;
    }
    return PiecewisePoly::combine(f, g, [](const Polynomial& p, const Polynomial& q) { return p * q; });
  };
  return {side(x.up, y.up), side(x.down, y.down)};
}

inline PiecewisePolyOfn k_scalar(double r, const PiecewisePolyOfn& x) { return {x.up.scaled(r), x.down.scaled(r)}; }
inline PiecewisePolyOfn k_neg(const PiecewisePolyOfn& x) { return k_scalar(-1.0, x); }

enum class KViolation { none, up_not_monotone, down_not_monotone, same_direction, wrong_direction, dominance };

inline const char* to_string(KViolation v) {
  switch (v) {
  case KViolation::none: return "none";
  case KViolation::up_not_monotone: return "up side not monotone";
  case KViolation::down_not_monotone: return "down side not monotone";
  case KViolation::same_direction: return "both sides monotone in the same direction";
  case KViolation::wrong_direction: return "side directions contradict the orientation";
  case KViolation::dominance: return "sides cross";
  }
  return "?";
}

struct KProprietyReport {
  bool proper = false;
  Orientation orientation = Orientation::degenerate;
  Monotonicity up = Monotonicity::constant;
  Monotonicity down = Monotonicity::constant;
  KViolation violation = KViolation::none;
};

namespace detail {

/// min over [0,1] of f - g, taken over breakpoints and critical points of each piece.
inline double min_difference(const PiecewisePoly& f, const PiecewisePoly& g) {
  const PiecewisePoly d = PiecewisePoly::combine(f, g, [](const Polynomial& p, const Polynomial& q) { return p - q; });
  double m = d(0.0);
  for (double a : d.monotone_breaks()) m = std::min(m, d(a));
  return m;
}

inline bool rising(Monotonicity m) { return m == Monotonicity::increasing || m == Monotonicity::constant; }
inline bool falling(Monotonicity m) { return m == Monotonicity::decreasing || m == Monotonicity::constant; }

/// `min_gap(up_on_top)` returns min over [0,1] of (up - down) when true, (down - up) otherwise.
template <class GapFn>
KViolation oriented_check(Monotonicity up, Monotonicity down, Orientation o, double scale, const GapFn& min_gap) {
  const bool decreasing = o == Orientation::decreasing;
  const Monotonicity lead = decreasing ? down : up;  // must rise
  const Monotonicity trail = decreasing ? up : down; // must fall
  if (up == down && up != Monotonicity::constant) return KViolation::same_direction;
  if (!rising(lead) || !falling(trail)) return KViolation::wrong_direction;
  if (min_gap(decreasing) < -1e-12 * scale) return KViolation::dominance;
  return KViolation::none;
}

} // namespace detail

/// Proper-OFN assessment of an arbitrary pair of continuous sides, given the
/// alphas splitting each side into monotone runs.
template <class F, class G, class GapFn>
KProprietyReport assess_sides(const F& up, const G& down, const std::vector<double>& up_runs,
                              const std::vector<double>& down_runs, const GapFn& min_gap) {
  KProprietyReport r;
  r.up = monotonicity(up, up_runs);
  r.down = monotonicity(down, down_runs);
  const double u0 = up(0.0), d0 = down(0.0), u1 = up(1.0), d1 = down(1.0);
  if (u0 != d0)
    r.orientation = u0 < d0 ? Orientation::increasing : Orientation::decreasing;
  else if (u1 != d1)
    r.orientation = u1 < d1 ? Orientation::increasing : Orientation::decreasing;
  else
    r.orientation = Orientation::degenerate;

  const double scale = 1.0 + std::abs(u0) + std::abs(d0) + std::abs(u1) + std::abs(d1);
  if (r.up == Monotonicity::non_monotone)
    r.violation = KViolation::up_not_monotone;
  else if (r.down == Monotonicity::non_monotone)
    r.violation = KViolation::down_not_monotone;
  else if (r.orientation == Orientation::degenerate) {
    r.violation = detail::oriented_check(r.up, r.down, Orientation::increasing, scale, min_gap);
    if (r.violation != KViolation::none &&
        detail::oriented_check(r.up, r.down, Orientation::decreasing, scale, min_gap) == KViolation::none)
      r.violation = KViolation::none;
  } else
    r.violation = detail::oriented_check(r.up, r.down, r.orientation, scale, min_gap);
  r.proper = r.violation == KViolation::none;
  return r;
}

/// Proper-OFN test: each side monotone in the direction its orientation demands,
/// and the up side below (increasing) or above (decreasing) the down side.
inline KProprietyReport k_is_proper(const PiecewisePolyOfn& x) {
  return assess_sides(x.up, x.down, x.up.monotone_breaks(), x.down.monotone_breaks(), [&](bool up_on_top) {
    return up_on_top ? detail::min_difference(x.up, x.down) : detail::min_difference(x.down, x.up);
  });
}

namespace detail {

/// Largest alpha in [0,1] with f(alpha) = v, if any. A constant run equal to v
/// contributes its right end.
inline std::optional<double> largest_preimage(const PiecewisePoly& f, double v) {
  const std::vector<double> runs = f.monotone_breaks();
  for (std::size_t i = runs.size() - 1; i-- > 0;) {
    const double lo = runs[i], hi = runs[i + 1];
    const double flo = f(lo), fhi = f(hi);
    if (fhi == v) return hi;
    if (std::min(flo, fhi) <= v && v <= std::max(flo, fhi))
      return flo == v ? lo : roots::bisect([&](double a) { return f(a) - v; }, lo, hi);
  }
  return std::nullopt;
}

} // namespace detail

/// Grade of v under the argmax repair: the largest level at which either side
/// attains v, and 1 anywhere between the two side values at alpha = 1.
inline double corresponding_membership(const PiecewisePolyOfn& x, double v) {
  double grade = 0.0;
  const double c0 = x.up(1.0), c1 = x.down(1.0);
  if (std::min(c0, c1) <= v && v <= std::max(c0, c1)) grade = 1.0;
  for (const auto* side : {&x.up, &x.down})
    if (auto a = detail::largest_preimage(*side, v)) grade = std::max(grade, *a);
  return grade;
}

} // namespace tofn
