#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include "errors.hpp"
#include "extended_real.hpp"
#include "polynomial.hpp"

namespace tofn {

/// An OFN given by two arbitrary continuous side functions on [0,1], bounded
/// at both ends. Sides from different families may be paired freely, so these
/// values do not form a typed ring; they exist for level sets and membership.
struct GeneralOfn {
  std::function<double(double)> up;
  std::function<double(double)> down;
};

inline Interval level_set(const GeneralOfn& x, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1]");
  const double u = x.up(alpha), d = x.down(alpha);
  return {std::min(u, d), std::max(u, d)};
}

inline Interval support(const GeneralOfn& x) {
  const Interval a = level_set(x, 0.0), b = level_set(x, 1.0);
  return {min(a.lo, b.lo), max(a.hi, b.hi)};
}

/// Membership grade at v, inverting each strictly monotone side by bisection.
/// The caller is responsible for propriety: sides monotone and meeting the core.
inline double membership_eval(const GeneralOfn& x, double v) {
  const Interval core = level_set(x, 1.0);
  if (core.contains(ExtendedReal(v))) return 1.0;
  for (const auto* side : {&x.up, &x.down}) {
    const auto& f = *side;
    const double f0 = f(0.0), f1 = f(1.0);
    if (f0 == f1 || v < std::min(f0, f1) || v > std::max(f0, f1)) continue;
    if (v == f0) return 0.0;
    return roots::bisect([&](double a) { return f(a) - v; }, 0.0, 1.0);
  }
  return 0.0;
}

} // namespace tofn
