#pragma once

// Independent reference computations used only by the test suites.

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "tofn/ofn.hpp"

namespace oracle {

/// Tanh-sinh (double exponential) quadrature on [a, b]; tolerates integrable
/// endpoint singularities because the nodes never touch the endpoints.
inline double tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol = 1e-13) {
  const double half = 0.5 * (b - a);
  const double pi_2 = std::acos(0.0);
  auto term = [&](double t) {
    const double u = pi_2 * std::sinh(t);
    const double cu = std::cosh(u);
    const double weight = pi_2 * std::cosh(t) / (cu * cu);
    const double x = std::tanh(u);
    // Distance to the nearer endpoint, computed without cancellation.
    const double gap = 1.0 / (std::exp(2.0 * std::abs(u)) + 1.0) * 2.0;
    const double node = x >= 0 ? b - half * gap : a + half * gap;
    if (!(node > a && node < b)) return 0.0;
    return weight * f(node);
  };
  double h = 1.0;
  double sum = term(0.0);
  for (int k = 1; k <= 40; ++k) sum += term(k * h) + term(-k * h);
  double estimate = sum * h;
  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    double extra = 0.0;
    const int n = static_cast<int>(std::ceil(40.0 / h));
    for (int k = 1; k <= n; k += 2) extra += term(k * h) + term(-k * h);
    sum += extra;
    const double next = sum * h;
    if (std::abs(next - estimate) < tol * (1.0 + std::abs(next)) && level > 3) return half * next;
    estimate = next;
  }
  return half * estimate;
}

/// Composite midpoint rule with n cells; never evaluates f at the endpoints.
inline double midpoint(const std::function<double(double)>& f, double a, double b, std::size_t n) {
  const double h = (b - a) / static_cast<double>(n);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += f(a + (static_cast<double>(i) + 0.5) * h);
  return s * h;
}

/// Plain bisection for a sign change of f on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline bool rel_close(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

inline bool tuples_close(const tofn::EssentialTuple& p, const tofn::EssentialTuple& q, double tol) {
  return rel_close(p.a_up, q.a_up, tol) && rel_close(p.b_up, q.b_up, tol) && rel_close(p.a_dn, q.a_dn, tol) &&
         rel_close(p.b_dn, q.b_dn, tol);
}

struct Generator {
  std::mt19937_64 rng;
  explicit Generator(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin() { return integer(0, 1) == 1; }

  tofn::EssentialTuple tuple(double lo = -10.0, double hi = 10.0) {
    return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
  }

  /// A proper OFN over `base` built by construction: sides monotone in the
  /// directions the chosen orientation demands, meeting a core [c1, c2].
  tofn::TypedOfn proper(const tofn::BaseRef& base) {
    const double dir = base->direction == tofn::Direction::increasing ? 1.0 : -1.0;
    const double rise = dir * uniform(0.1, 3.0);  // coefficient giving an increasing side
    const double fall = -dir * uniform(0.1, 3.0); // coefficient giving a decreasing side
    const double c1 = uniform(-5.0, 5.0);
    const double c2 = c1 + uniform(0.0, 3.0);
    const double h1 = base->range_at_1;
    if (coin()) // increasing: up rises to c1, down falls to c2
      return {base, {rise, c1 - rise * h1, fall, c2 - fall * h1}};
    // decreasing: down rises to c1, up falls to c2
    return {base, {fall, c2 - fall * h1, rise, c1 - rise * h1}};
  }
};

} // namespace oracle
