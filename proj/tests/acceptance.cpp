// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tofn/tofn.hpp"

using namespace tofn;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

bool same(const TypedOfn& x, EssentialTuple t) { return x.tuple() == t; }

Outcome worked_ring() {
  const TypedOfn x = trapezoid(1, -5, -1, -3), y = trapezoid(1, 5, -1, 3);
  const bool ok = same(x + y, {2, 0, -2, 0}) && same(x - y, {0, -10, 0, -6}) && same(x * y, {1, -25, 1, -9}) &&
                  same(x / y, {1, -1, 1, -1});
  return {ok, "four operations, exact"};
}

Outcome typeless_sum() {
  return {same(trapezoid(0, -1, -1, 0) + trapezoid(0, 2, 4, -2), {0, 1, 3, -2}), "(0,1,3,-2), exact"};
}

Outcome gaussian_sum() {
  const TypedOfn s = gaussian(0.25, 0, -0.25, 0) + gaussian(0.125, 1, -0.125, 1);
  return {s.tag() == "gaussian" && same(s, {0.375, 1, -0.375, 1}), "(3/8,1,-3/8,1), exact"};
}

Outcome ring_axioms() {
  oracle::Generator gen(4);
  double worst = 0.0;
  bool exact = true;
  for (const auto& base : BaseRegistry::builtin().all()) {
    const TypedOfn zero(base, {0, 0, 0, 0}), one(base, {1, 1, 1, 1});
    for (int i = 0; i < 10000; ++i) {
      const TypedOfn x(base, gen.tuple()), y(base, gen.tuple()), z(base, gen.tuple());
      exact = exact && x + y == y + x && x * y == y * x && x + zero == x && x * one == x &&
              same(x + (-x), {0, 0, 0, 0});
      auto rel = [&](const TypedOfn& p, const TypedOfn& q) {
        const auto& a = p.tuple();
        const auto& b = q.tuple();
        for (auto [u, v] : {std::pair{a.a_up, b.a_up}, {a.b_up, b.b_up}, {a.a_dn, b.a_dn}, {a.b_dn, b.b_dn}})
          worst = std::max(worst, std::abs(u - v) / std::max({1.0, std::abs(u), std::abs(v)}));
      };
      rel((x + y) + z, x + (y + z));
      rel((x * y) * z, x * (y * z));
      rel(x * (y + z), x * y + x * z);
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "exact laws %s, worst relative error %.2e", exact ? "hold" : "FAIL", worst);
  return {exact && worst <= 1e-9, buf};
}

Outcome kosinski() {
  const PiecewisePolyOfn s = k_op(KStar::add, to_piecewise(trapezoid(1, 0, -1, 2)), to_piecewise(trapezoid(-2, 1, 0, -3)));
  const bool sum_ok = s == to_piecewise(trapezoid(-1, 1, -1, -1)) && !k_is_proper(s).proper;
  const TypedOfn t = trapezoid(-1, 1, -1, -1);
  const bool ok = sum_ok && classify(t).pathology == Pathology::type_ii && nesting_violated(t, 0.5, 1.0) &&
                  level_set(t, 1.0) == Interval(-2.0, 0.0) && level_set(t, 0.5) == Interval(-1.5, 0.5);
  return {ok, "(1-x,-1-x) type-ii, [-2,0] not inside [-3/2,1/2]"};
}

Outcome piasecki() {
  const PiaseckiResult r = p_op(Star::mul, trapezoid(0, -1, -1, 0), trapezoid(0, 2, 4, -2));
  const ClosureReport c = p_closure_check(r);
  const bool ok = r.corners == TrapezoidCorners{-2, -2, -2, 0} && r.down_fn.is_polynomial() &&
                  r.down_fn.num == Polynomial{0, 2, -4} && !c.closed && c.witness && c.witness_side == Side::down &&
                  c.witness->value == 0.0 && c.witness->alpha_first == 0.0 &&
                  std::abs(c.witness->alpha_second - 0.5) <= 1e-15 && r.down_fn(0.0) == 0.0 && r.down_fn(0.5) == 0.0;
  return {ok, "corners (-2,-2,-2,0), down -4a^2+2a, witness at 0 and 1/2"};
}

Outcome corrections() {
  const TypedOfn y = correct_type_ii(trapezoid(1, 2, 1, 0));
  const TypedOfn ab = correct_type_ii(trapezoid(-1, 1, -1, -1));
  bool ok = same(y, {0, 2, 1, 0}) && is_proper(y) && same(ab, {-1, 1, 0, -1}) && is_proper(ab);
  const TypedOfn untwisted = correct_type_iii(trapezoid(-2, 3, 2, 1));
  ok = ok && same(untwisted, {-2, 1, 2, 3}) && !is_proper(untwisted);
  oracle::Generator gen(7);
  int failures = 0;
  for (const auto& base : BaseRegistry::builtin().all())
    for (int n = 0; n < 10000;) {
      const TypedOfn x(base, gen.tuple());
      if (is_proper(x)) continue;
      ++n;
      if (!is_proper(correct(x).ofn)) ++failures;
    }
  return {ok && failures == 0, "worked repairs proper; " + std::to_string(failures) + " of 40000 random repairs improper"};
}

Outcome membership_checks() {
  oracle::Generator gen(8);
  double worst = 0.0;
  for (const auto& base : BaseRegistry::builtin().all())
    for (int i = 0; i < 100; ++i) {
      const TypedOfn x = gen.proper(base);
      const MembershipFunction m = membership(x);
      for (int k = 0; k < 20; ++k) {
        const double a = gen.uniform(1e-6, 1.0);
        for (Side s : {Side::up, Side::down})
          worst = std::max(worst, std::abs(membership_eval(m, side_eval(x, s, a).value()) - a));
      }
    }
  const GeneralOfn w{[](double t) { return std::sqrt(t); }, [](double t) { return 2.0 - t; }};
  double worked = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double v = 2.0 * i / 49;
    worked = std::max(worked, std::abs(membership_eval(w, v) - (v <= 1 ? v * v : 2 - v)));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "round trip %.2e, worked example %.2e", worst, worked);
  return {worst <= 1e-9 && worked <= 1e-12, buf};
}

Outcome bridges() {
  oracle::Generator gen(9);
  auto random_lr = [&] {
    double c[4];
    for (double& v : c) v = gen.uniform(-5, 5);
    std::sort(std::begin(c), std::end(c));
    return trapezoid_lr(c[0], c[1], c[2], c[3]);
  };
  double corner = 0.0;
  for (int i = 0; i < 200; ++i) {
    const LRFuzzyNumber x = random_lr(), y = random_lr();
    const LRFuzzyNumber a = lr_from_typed(typed_from_lr(x) + typed_from_lr(y)), b = levelset_add(x, y);
    corner = std::max({corner, std::abs(a.a0m - b.a0m), std::abs(a.a1m - b.a1m), std::abs(a.a1p - b.a1p),
                       std::abs(a.a0p - b.a0p)});
  }
  const LRFuzzyNumber x = random_lr(), y = random_lr();
  const SampledMembership z = zadeh_add_grid(x, y, 2001);
  const LRFuzzyNumber s = levelset_add(x, y);
  double grid = 0.0;
  for (std::size_t k = 0; k < z.z.size(); ++k) grid = std::max(grid, std::abs(z.grade[k] - lr_membership(s, z.z[k])));

  // Brute force over a 100 x 100 grid of the alpha-cuts, found by bisection on membership.
  double product = 0.0;
  for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    auto cut = [&](const LRFuzzyNumber& n) {
      auto f = [&](double v) { return lr_membership(n, v) - alpha; };
      return std::pair{n.a1m == n.a0m ? n.a1m : oracle::bisect(f, n.a0m, n.a1m),
                       n.a1p == n.a0p ? n.a1p : oracle::bisect(f, n.a1p, n.a0p)};
    };
    const auto [xl, xh] = cut(x);
    const auto [yl, yh] = cut(y);
    double lo = INFINITY, hi = -INFINITY;
    for (int p = 0; p < 100; ++p)
      for (int q = 0; q < 100; ++q) {
        const double v = (xl + (xh - xl) * p / 99) * (yl + (yh - yl) * q / 99);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    const Interval m = zadeh_mul_levelsets(x, y, alpha);
    product = std::max({product, std::abs(m.lo.value() - lo), std::abs(m.hi.value() - hi)});
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "corners %.1e, sup-min grid %.1e, product %.1e", corner, grid, product);
  return {corner <= 1e-12 && grid <= 0.01 && product <= 2e-3, buf};
}

Outcome path_algebra() {
  const FuzzyDigraph g(5, {{0, 1, trapezoid(1, 1, -1, 4)},
                           {0, 2, trapezoid(2, 2, -2, 7)},
                           {1, 2, trapezoid(0.5, 0, -0.5, 2)},
                           {1, 3, trapezoid(1, 5, -1, 8)},
                           {2, 3, trapezoid(1, 1, -1, 3)},
                           {3, 4, trapezoid(1, 0, -1, 2)},
                           {2, 4, trapezoid(1, 6, -1, 9)},
                           {4, 1, trapezoid(1, 1, -1, 2)}});
  // Exhaustive simple-path enumeration with an independently written rank.
  auto orank = [](const EssentialTuple& t) { return 0.25 * (t.a_up + t.a_dn) + 0.5 * (t.b_up + t.b_dn); };
  bool ok = true;
  for (std::size_t src = 0; src < 5; ++src) {
    std::vector<std::optional<EssentialTuple>> best(5);
    std::vector<bool> on(5, false);
    std::function<void(std::size_t, EssentialTuple)> visit = [&](std::size_t v, EssentialTuple acc) {
      if (!best[v] || orank(acc) < orank(*best[v])) best[v] = acc;
      on[v] = true;
      for (const auto& e : g.edges())
        if (e.from == v && !on[e.to]) {
          const auto& w = e.weight.tuple();
          visit(e.to, {acc.a_up + w.a_up, acc.b_up + w.b_up, acc.a_dn + w.a_dn, acc.b_dn + w.b_dn});
        }
      on[v] = false;
    };
    visit(src, {0, 0, 0, 0});
    const ShortestPaths sp = shortest_paths(g, src);
    for (std::size_t v = 0; v < 5; ++v)
      ok = ok && sp.distance[v].has_value() == best[v].has_value() && (!best[v] || sp.distance[v]->tuple() == *best[v]);
  }

  // All-crisp graph against textbook Bellman-Ford on doubles.
  const std::vector<std::tuple<std::size_t, std::size_t, double>> plain{
      {0, 1, 4}, {0, 2, 1}, {2, 1, -2}, {1, 3, 3}, {2, 3, 6}, {3, 4, -1}, {4, 2, 5}, {1, 4, 7}};
  std::vector<FuzzyEdge> edges;
  for (const auto& [u, v, w] : plain) edges.push_back({u, v, crisp(w)});
  const ShortestPaths sp = shortest_paths(FuzzyDigraph(5, edges), 0);
  std::vector<double> d(5, INFINITY);
  d[0] = 0;
  for (int i = 0; i < 4; ++i)
    for (const auto& [u, v, w] : plain) d[v] = std::min(d[v], d[u] + w);
  for (std::size_t v = 0; v < 5; ++v) ok = ok && sp.distance[v] && sp.distance[v]->tuple() == EssentialTuple{0, d[v], 0, d[v]};
  return {ok, "5-node fixture and crisp graph"};
}

Outcome demo_command() {
  FILE* p = popen(TOFN_CLI_PATH " demo", "r");
  if (!p) return {false, "cannot launch CLI"};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  int pass_rows = 0;
  for (int id = 1; id <= 7; ++id) {
    char tag[16];
    std::snprintf(tag, sizeof tag, "PASS %d ", id);
    if (out.find(tag) != std::string::npos) ++pass_rows;
  }
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code == 0 && pass_rows == 7, "exit " + std::to_string(code) + ", " + std::to_string(pass_rows) + "/7 PASS rows"};
}

} // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"worked trapezoidal arithmetic", worked_ring},
      {"typeless-side addition", typeless_sum},
      {"Gaussian addition", gaussian_sum},
      {"ring axioms", ring_axioms},
      {"sum of proper OFNs is improper", kosinski},
      {"revised product is not closed", piasecki},
      {"corrections", corrections},
      {"membership", membership_checks},
      {"classical bridges", bridges},
      {"path algebra", path_algebra},
      {"demo command", demo_command},
  };
  int failed = 0;
  int id = 0;
  for (const auto& [name, fn] : criteria) {
    ++id;
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2d %-32s %s\n", o.passed ? "PASS" : "FAIL", id, name, o.detail.c_str());
    failed += !o.passed;
  }
  return failed == 0 ? 0 : 1;
}
