#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "base.hpp"
#include "errors.hpp"
#include "extended_real.hpp"
#include "ofn.hpp"
#include "propriety.hpp"

namespace tofn {

/// Continuous increasing bijection of [0,1] shaping one flank of an L-R number.
struct Spread {
  std::string family;
  std::function<double(double)> shape;
  std::function<double(double)> inverse;

  static Spread linear() {
    return {"linear", [](double t) { return t; }, [](double a) { return a; }};
  }
};

/// Classical L-R fuzzy number with support [a0m, a0p] and core [a1m, a1p].
struct LRFuzzyNumber {
  double a0m = 0.0;
  double a1m = 0.0;
  double a1p = 0.0;
  double a0p = 0.0;
  Spread left = Spread::linear();
  Spread right = Spread::linear();

  LRFuzzyNumber(double a0m_, double a1m_, double a1p_, double a0p_, Spread l = Spread::linear(),
                Spread r = Spread::linear())
      : a0m(a0m_), a1m(a1m_), a1p(a1p_), a0p(a0p_), left(std::move(l)), right(std::move(r)) {
    if (!(a0m <= a1m && a1m <= a1p && a1p <= a0p)) throw DomainError("L-R corners must be non-decreasing");
  }

  double left_spread() const noexcept { return a1m - a0m; }
  double right_spread() const noexcept { return a0p - a1p; }
  Interval core() const { return {a1m, a1p}; }
  Interval support() const { return {a0m, a0p}; }
};

inline LRFuzzyNumber trapezoid_lr(double a0m, double a1m, double a1p, double a0p) {
  return {a0m, a1m, a1p, a0p};
}

inline double lr_membership(const LRFuzzyNumber& n, double x) {
  if (x < n.a0m) return 0.0;
  // With zero left spread a0m == a1m, so this ramp is never entered.
  if (x < n.a1m) return n.left.shape((x - n.a0m) / n.left_spread());
  if (x <= n.a1p) return 1.0;
  if (x < n.a0p) return n.right.shape((n.a0p - x) / n.right_spread());
  return 0.0;
}

inline Interval lr_level_set(const LRFuzzyNumber& n, double alpha) {
  detail::check_alpha(alpha);
  return {n.a0m + n.left.inverse(alpha) * n.left_spread(), n.a0p - n.right.inverse(alpha) * n.right_spread()};
}

/// Level-set addition: corners add.
inline LRFuzzyNumber levelset_add(const LRFuzzyNumber& x, const LRFuzzyNumber& y) {
  if (x.left.family != y.left.family || x.right.family != y.right.family)
    throw FamilyMismatch("L-R numbers from different spread families");
  return {x.a0m + y.a0m, x.a1m + y.a1m, x.a1p + y.a1p, x.a0p + y.a0p, x.left, x.right};
}

struct SampledMembership {
  std::vector<double> z;
  std::vector<double> grade;
};

/// Sup-min convolution mu(z) = sup_{z = s + t} min(mu_x(s), mu_y(t)) on a uniform
/// z grid over the summed supports. Each z takes the sup over s on a grid of
/// x's support and over t on a grid of y's support.
inline SampledMembership zadeh_add_grid(const LRFuzzyNumber& x, const LRFuzzyNumber& y, int grid) {
  if (grid < 101) throw DomainError("extension-principle grid needs at least 101 points");
  auto node = [grid](double lo, double hi, int i) { return lo + (hi - lo) * i / (grid - 1); };
  SampledMembership out;
  out.z.reserve(static_cast<std::size_t>(grid));
  out.grade.reserve(static_cast<std::size_t>(grid));
  const double zlo = x.a0m + y.a0m, zhi = x.a0p + y.a0p;
  for (int k = 0; k < grid; ++k) {
    const double z = node(zlo, zhi, k);
    double best = 0.0;
    for (int i = 0; i < grid && best < 1.0; ++i) {
      const double s = node(x.a0m, x.a0p, i);
      best = std::max(best, std::min(lr_membership(x, s), lr_membership(y, z - s)));
      const double t = node(y.a0m, y.a0p, i);
      best = std::max(best, std::min(lr_membership(x, z - t), lr_membership(y, t)));
    }
    out.z.push_back(z);
    out.grade.push_back(best);
  }
  return out;
}

/// Level set of the extension-principle product: the hull of the four endpoint products.
inline Interval zadeh_mul_levelsets(const LRFuzzyNumber& x, const LRFuzzyNumber& y, double alpha) {
  const Interval p = lr_level_set(x, alpha);
  const Interval q = lr_level_set(y, alpha);
  const double c[] = {p.lo.value() * q.lo.value(), p.lo.value() * q.hi.value(), p.hi.value() * q.lo.value(),
                      p.hi.value() * q.hi.value()};
  return {*std::min_element(std::begin(c), std::end(c)), *std::max_element(std::begin(c), std::end(c))};
}

/// The L-R reading of a proper increasing trapezoidal OFN.
inline LRFuzzyNumber lr_from_typed(const TypedOfn& x) {
  if (x.tag() != "identity" && !x.is_rectangular()) throw MixedTypeError("only trapezoidal OFNs have an L-R form");
  if (!is_proper(x) || orientation(x) == Orientation::decreasing)
    throw ImproperError("L-R conversion needs a proper, non-decreasing OFN");
  const auto& t = x.tuple();
  return trapezoid_lr(t.b_up, t.a_up + t.b_up, t.a_dn + t.b_dn, t.b_dn);
}

/// Increasing trapezoidal OFN with up = a0m + u*alpha and down = a0p - v*alpha.
inline TypedOfn typed_from_lr(const LRFuzzyNumber& n) {
  if (n.left.family != "linear" || n.right.family != "linear")
    throw FamilyMismatch("only linear L-R numbers are trapezoidal");
  return trapezoid(n.left_spread(), n.a0m, -n.right_spread(), n.a0p);
}

} // namespace tofn
