#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "general.hpp"
#include "kosinski.hpp"
#include "ofn.hpp"
#include "piasecki.hpp"
#include "propriety.hpp"

namespace tofn {

struct DemoRow {
  int id;
  std::string title;
  bool passed;
  std::string detail;
};

namespace demo_detail {

inline bool same(const TypedOfn& x, const EssentialTuple& t) { return x.tuple() == t; }

inline DemoRow example2() {
  const TypedOfn x = trapezoid(1, -5, -1, -3);
  const TypedOfn y = trapezoid(1, 5, -1, 3);
  const bool ok = same(x + y, {2, 0, -2, 0}) && same(x - y, {0, -10, 0, -6}) && same(x * y, {1, -25, 1, -9}) &&
                  same(x / y, {1, -1, 1, -1});
  return {1, "trapezoidal ring, four operations", ok, "(x-5,-x-3) op (x+5,-x+3)"};
}

inline DemoRow example1() {
  const bool ok = same(trapezoid(0, -1, -1, 0) + trapezoid(0, 2, 4, -2), {0, 1, 3, -2});
  return {2, "trapezoidal addition with typeless sides", ok, "(-1,-x) + (2,4x-2) = (1,3x-2)"};
}

inline DemoRow gaussian_sum() {
  const bool ok = same(gaussian(0.25, 0, -0.25, 0) + gaussian(0.125, 1, -0.125, 1), {0.375, 1, -0.375, 1});
  return {3, "Gaussian ring addition", ok, "(h/4, -h/4) + (h/8+1, -h/8+1)"};
}

inline DemoRow ring_axioms() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  auto draw = [&](const BaseRef& b) { return TypedOfn(b, {u(rng), u(rng), u(rng), u(rng)}); };
  auto close = [](const TypedOfn& p, const TypedOfn& q) {
    const double a[] = {p.tuple().a_up, p.tuple().b_up, p.tuple().a_dn, p.tuple().b_dn};
    const double b[] = {q.tuple().a_up, q.tuple().b_up, q.tuple().a_dn, q.tuple().b_dn};
    for (int i = 0; i < 4; ++i)
      if (std::abs(a[i] - b[i]) > 1e-9 * std::max({1.0, std::abs(a[i]), std::abs(b[i])})) return false;
    return true;
  };
  bool ok = true;
  for (const auto& base : BaseRegistry::builtin().all())
    for (int i = 0; i < 10000 && ok; ++i) {
      const TypedOfn x = draw(base), y = draw(base), z = draw(base);
      ok = x + y == y + x && x * y == y * x && x + crisp(0.0, base) == x && x * TypedOfn(base, {1, 1, 1, 1}) == x &&
           same(x + (-x), {0, 0, 0, 0}) && close((x + y) + z, x + (y + z)) && close((x * y) * z, x * (y * z)) &&
           close(x * (y + z), x * y + x * z);
    }
  return {4, "commutative ring axioms on random tuples", ok, "10^4 triples per base"};
}

inline DemoRow kosinski_counterexample() {
  const PiecewisePolyOfn a{Polynomial::linear(1, 0), Polynomial::linear(-1, 2)};
  const PiecewisePolyOfn b{Polynomial::linear(-2, 1), Polynomial::constant(-3)};
  const PiecewisePolyOfn s = k_op(KStar::add, a, b);
  const TypedOfn typed = trapezoid(1, 0, -1, 2) + trapezoid(-2, 1, 0, -3);
  const bool ok = s == PiecewisePolyOfn{Polynomial::linear(-1, 1), Polynomial::linear(-1, -1)} &&
                  !k_is_proper(s).proper && classify(typed).pathology == Pathology::type_ii &&
                  level_set(typed, 1.0) == Interval(-2.0, 0.0) && level_set(typed, 0.5) == Interval(-1.5, 0.5) &&
                  nesting_violated(typed, 0.5, 1.0);
  return {5, "Kosinski sum of proper OFNs is improper", ok, "(x,2-x)+(1-2x,-3) = (1-x,-1-x)"};
}

inline DemoRow piasecki_refutation() {
  const PiaseckiResult r = p_op(Star::mul, trapezoid(0, -1, -1, 0), trapezoid(0, 2, 4, -2));
  const ClosureReport c = p_closure_check(r);
  const bool ok = r.corners == TrapezoidCorners{-2, -2, -2, 0} && r.up_rule == SideRule::constant &&
                  r.down_fn.num == Polynomial({0, 2, -4}) && !c.closed && c.witness && r.down_fn(0.0) == 0.0 &&
                  r.down_fn(0.5) == 0.0;
  return {6, "revised trapezoidal product leaves the proper OFNs", ok, "(-1,-x) * (2,4x-2)"};
}

inline DemoRow corrections() {
  const TypedOfn y = trapezoid(1, 2, 1, 0);
  const TypedOfn ab = trapezoid(-1, 1, -1, -1);
  const TypedOfn x = trapezoid(-2, 3, 2, 1);
  const TypedOfn y_fixed = correct_type_ii(y);
  const TypedOfn ab_fixed = correct_type_ii(ab);
  const TypedOfn x_untwisted = correct_type_iii(x);
  const Corrected x_fixed = correct(x);
  const bool ok = same(y_fixed, {0, 2, 1, 0}) && is_proper(y_fixed) && same(ab_fixed, {-1, 1, 0, -1}) &&
                  is_proper(ab_fixed) && same(x_untwisted, {-2, 1, 2, 3}) && !is_proper(x_untwisted) &&
                  x_fixed.applied == Correction::fallback && same(x_fixed.ofn, {0, 1, 0, 3});
  return {7, "type-preserving corrections", ok, "(a+2,a) -> (2,a); (1-x,-1-x) -> (1-x,-1)"};
}

inline DemoRow worked_membership() {
  // The up side is a square root and the down side is linear, so A is a general OFN.
  const GeneralOfn a{[](double t) { return std::sqrt(t); }, [](double t) { return 2.0 - t; }};
  bool ok = level_set(a, 0.25) == Interval(0.5, 1.75) && level_set(a, 1.0) == Interval(1.0, 1.0) &&
            support(a) == Interval(0.0, 2.0);
  for (int i = 0; i <= 40 && ok; ++i) {
    const double v = 2.0 * i / 40;
    const double expected = v <= 1.0 ? v * v : 2.0 - v;
    ok = std::abs(membership_eval(a, v) - expected) <= 1e-12;
  }
  return {8, "level sets and membership of (sqrt a, 2-a)", ok, "x^2 on [0,1], 2-x on [1,2]"};
}

} // namespace demo_detail

/// Runs the built-in worked examples; every row must pass on a correct build.
inline std::vector<DemoRow> run_demo() {
  using namespace demo_detail;
  std::vector<DemoRow> rows;
  for (auto f : {example2, example1, gaussian_sum, ring_axioms, kosinski_counterexample, piasecki_refutation,
                 corrections, worked_membership}) {
    try {
      rows.push_back(f());
    } catch (const std::exception& e) {
      rows.push_back({static_cast<int>(rows.size()) + 1, "exception", false, e.what()});
    }
  }
  return rows;
}

} // namespace tofn
