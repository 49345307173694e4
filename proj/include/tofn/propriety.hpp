#pragma once

#include <optional>
#include <utility>

#include "base.hpp"
#include "errors.hpp"
#include "extended_real.hpp"
#include "ofn.hpp"

namespace tofn {

enum class Pathology { none, type_ii, type_iii, combined };

inline const char* to_string(Pathology p) {
  switch (p) {
  case Pathology::none: return "none";
  case Pathology::type_ii: return "type-ii";
  case Pathology::type_iii: return "type-iii";
  case Pathology::combined: return "combined";
  }
  return "?";
}

struct ProprietyReport {
  bool proper = false;
  Orientation orientation = Orientation::degenerate;
  /// sgn(a_up) == sgn(a_dn) != 0
  bool same_sign = false;
  /// The closed side ranges share more than one point.
  bool crossing = false;
  Pathology pathology = Pathology::none;
};

namespace detail {

inline int sgn(double v) noexcept { return (v > 0) - (v < 0); }

/// +1 increasing, -1 decreasing, 0 constant.
inline int side_direction(const TypedOfn& x, Side s) {
  return sgn(x.coefficient(s)) * sign_of(x.base().direction);
}

/// lower(alpha) <= upper(alpha) on [0,1]. The difference is affine in h, hence
/// monotone in alpha, so checking both ends is exact.
inline bool dominated(const TypedOfn& x, Side lower, Side upper) {
  const double da = x.coefficient(upper) - x.coefficient(lower);
  const double db = x.offset(upper) - x.offset(lower);
  const ExtendedReal zero(0.0);
  return affine(da, eval_h(x.base(), 0.0), db) >= zero && affine(da, eval_h(x.base(), 1.0), db) >= zero;
}

inline bool proper_as(const TypedOfn& x, Orientation o) {
  if (o == Orientation::decreasing)
    return side_direction(x, Side::down) >= 0 && side_direction(x, Side::up) <= 0 &&
           dominated(x, Side::down, Side::up);
  return side_direction(x, Side::up) >= 0 && side_direction(x, Side::down) <= 0 && dominated(x, Side::up, Side::down);
}

} // namespace detail

/// Proper/improper classification with the pathology that the corrections act on.
///
/// Sides of a typed OFN are monotone by construction, so non-monotonicity never
/// occurs. An improper OFN whose side coefficients share a sign is type-ii when
/// the side ranges are disjoint (or touch in one point) and combined otherwise;
/// every other improper OFN is type-iii, whose sides are twisted against the
/// orientation whether or not their ranges overlap.
inline ProprietyReport classify(const TypedOfn& x) {
  ProprietyReport r;
  r.orientation = orientation(x);
  const int su = detail::sgn(x.tuple().a_up);
  r.same_sign = su != 0 && su == detail::sgn(x.tuple().a_dn);
  const Interval up = side_range(x, Side::up);
  const Interval dn = side_range(x, Side::down);
  r.crossing = max(up.lo, dn.lo) < min(up.hi, dn.hi);

  if (r.orientation == Orientation::degenerate)
    r.proper = detail::proper_as(x, Orientation::increasing) || detail::proper_as(x, Orientation::decreasing);
  else
    r.proper = detail::proper_as(x, r.orientation);

  if (r.proper)
    r.pathology = Pathology::none;
  else if (r.same_sign)
    r.pathology = r.crossing ? Pathology::combined : Pathology::type_ii;
  else
    r.pathology = Pathology::type_iii;
  return r;
}

inline bool is_proper(const TypedOfn& x) { return classify(x).proper; }

/// True when level_set(x, alpha_high) is not contained in level_set(x, alpha_low)
/// for alpha_low < alpha_high; proper OFNs never nest this way.
inline bool nesting_violated(const TypedOfn& x, double alpha_low, double alpha_high) {
  return !level_set(x, alpha_low).contains(level_set(x, alpha_high));
}

/// First pair (alpha_low, alpha_high) on a uniform grid whose level sets fail to nest.
inline std::optional<std::pair<double, double>> find_nesting_violation(const TypedOfn& x, int points = 101) {
  for (int i = 0; i < points; ++i)
    for (int j = i + 1; j < points; ++j) {
      const double lo = static_cast<double>(i) / (points - 1);
      const double hi = static_cast<double>(j) / (points - 1);
      if (nesting_violated(x, lo, hi)) return std::pair{lo, hi};
    }
  return std::nullopt;
}

/// One monotone flank of a membership function: on `domain` the grade is
/// h^-1((v - b) / a).
struct MembershipBranch {
  Interval domain;
  double a = 1.0;
  double b = 0.0;
};

struct MembershipFunction {
  BaseRef base;
  /// Flank generated by the up side; absent when that side is constant.
  std::optional<MembershipBranch> up_branch;
  std::optional<MembershipBranch> down_branch;
  Interval core;
};

inline MembershipFunction membership(const TypedOfn& x) {
  if (!is_proper(x)) throw ImproperError("membership function requested for an improper OFN");
  MembershipFunction m;
  m.base = x.base_ref();
  m.core = Interval::hull(side_eval(x, Side::up, 1.0), side_eval(x, Side::down, 1.0));
  // Constant sides contribute no flank: the grade jumps from 0 to 1 at the core.
  for (Side s : {Side::up, Side::down}) {
    if (x.coefficient(s) == 0.0) continue;
    MembershipBranch br{side_range(x, s), x.coefficient(s), x.offset(s)};
    (s == Side::up ? m.up_branch : m.down_branch) = br;
  }
  return m;
}

inline double membership_eval(const MembershipFunction& m, double v) {
  const ExtendedReal xv(v);
  if (m.core.contains(xv)) return 1.0;
  for (const auto* br : {&m.up_branch, &m.down_branch}) {
    if (!*br || !(*br)->domain.contains(xv)) continue;
    const Interval range = m.base->range();
    double t = (v - (*br)->b) / (*br)->a;
    // Rounding can push t just past a finite end of the range.
    if (range.lo.is_finite()) t = std::max(t, range.lo.value());
    if (range.hi.is_finite()) t = std::min(t, range.hi.value());
    return inv_h(*m.base, ExtendedReal(t));
  }
  return 0.0;
}

/// Type-ii repair: collapse one side to its constant term.
inline TypedOfn correct_type_ii(const TypedOfn& x) {
  const ProprietyReport r = classify(x);
  if (r.pathology != Pathology::type_ii)
    throw WrongPathology(std::string("type-ii correction applied to pathology ") + to_string(r.pathology));
  const auto& t = x.tuple();
  const bool positive = t.a_up > 0;
  // Increasing/+1 and decreasing/-1 keep the up side; the other two keep the down side.
  const bool keep_up = (r.orientation == Orientation::increasing) == positive;
  if (keep_up) return {x.base_ref(), {t.a_up, t.b_up, 0.0, t.b_dn}};
  return {x.base_ref(), {0.0, t.b_up, t.a_dn, t.b_dn}};
}

/// Type-iii repair: swap the constant terms of the two sides.
inline TypedOfn correct_type_iii(const TypedOfn& x) {
  const ProprietyReport r = classify(x);
  if (r.pathology != Pathology::type_iii)
    throw WrongPathology(std::string("type-iii correction applied to pathology ") + to_string(r.pathology));
  const auto& t = x.tuple();
  return {x.base_ref(), {t.a_up, t.b_dn, t.a_dn, t.b_up}};
}

namespace detail {

inline TypedOfn collapse_to_core(const TypedOfn& x) {
  return {x.base_ref(),
          {0.0, side_eval(x, Side::up, 1.0).finite_value(), 0.0, side_eval(x, Side::down, 1.0).finite_value()}};
}

} // namespace detail

/// Combined ii+iii repair: the rectangular OFN (mu_up(1), mu_dn(1)).
inline TypedOfn correct_combined(const TypedOfn& x) {
  const ProprietyReport r = classify(x);
  if (r.pathology != Pathology::combined)
    throw WrongPathology(std::string("combined correction applied to pathology ") + to_string(r.pathology));
  return detail::collapse_to_core(x);
}

enum class Correction { none, ii, iii, combined, fallback };

inline const char* to_string(Correction c) {
  switch (c) {
  case Correction::none: return "none";
  case Correction::ii: return "ii";
  case Correction::iii: return "iii";
  case Correction::combined: return "combined";
  case Correction::fallback: return "fallback";
  }
  return "?";
}

struct Corrected {
  TypedOfn ofn;
  Correction applied;
};

/// Dispatches on the pathology. When the type-ii or type-iii repair leaves the
/// result improper, the input is collapsed to its core instead and labelled
/// `fallback`.
inline Corrected correct(const TypedOfn& x) {
  switch (classify(x).pathology) {
  case Pathology::none: return {x, Correction::none};
  case Pathology::combined: return {correct_combined(x), Correction::combined};
  case Pathology::type_ii: {
    TypedOfn y = correct_type_ii(x);
    if (is_proper(y)) return {y, Correction::ii};
    break;
  }
  case Pathology::type_iii: {
    TypedOfn y = correct_type_iii(x);
    if (is_proper(y)) return {y, Correction::iii};
    break;
  }
  }
  return {detail::collapse_to_core(x), Correction::fallback};
}

} // namespace tofn
