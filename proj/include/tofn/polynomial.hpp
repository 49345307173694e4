#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace tofn {

/// Highest polynomial degree any side function may reach.
inline constexpr int max_poly_degree = 8;

/// Real polynomial in alpha with coefficients in ascending order of power.
class Polynomial {
public:
  Polynomial() : c_{0.0} {}
  Polynomial(std::initializer_list<double> coeffs) : c_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(double v) { return Polynomial{v}; }
  /// a*alpha + b
  static Polynomial linear(double a, double b) { return Polynomial{b, a}; }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coefficients() const noexcept { return c_; }
  double coefficient(int k) const noexcept { return k <= degree() ? c_[static_cast<std::size_t>(k)] : 0.0; }
  bool is_constant() const noexcept { return degree() == 0; }

  double operator()(double x) const noexcept {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (degree() == 0) return {};
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<double> r(std::max(p.c_.size(), q.c_.size()), 0.0);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = p.coefficient(static_cast<int>(k)) + q.coefficient(static_cast<int>(k));
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& p) { return -1.0 * p; }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

  friend Polynomial operator*(double s, const Polynomial& p) {
    std::vector<double> r = p.c_;
    for (double& v : r) v *= s;
    return Polynomial(std::move(r));
  }

  /// Throws DegreeCap when the product degree exceeds max_poly_degree.
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.degree() + q.degree() > max_poly_degree)
      throw DegreeCap("polynomial product of degree " + std::to_string(p.degree() + q.degree()) +
                      " exceeds the cap of " + std::to_string(max_poly_degree));
    std::vector<double> r(p.c_.size() + q.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    os << '[';
    for (std::size_t k = 0; k < p.c_.size(); ++k) os << (k ? ", " : "") << p.c_[k];
    return os << ']';
  }

private:
  void normalize() {
    if (c_.empty()) c_.push_back(0.0);
    while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
    if (degree() > max_poly_degree) throw DegreeCap("polynomial degree exceeds the cap");
  }

  std::vector<double> c_;
};

namespace roots {

/// Cells used to bracket sign changes before bisection.
inline constexpr int bracket_cells = 1024;

/// Bisection on [lo, hi] where f(lo) and f(hi) differ in sign; runs to machine precision.
template <class F>
double bisect(F f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Sign-change roots of p strictly inside (lo, hi), ascending. Even-multiplicity
/// roots produce no sign change and are not reported.
inline std::vector<double> sign_changes(const Polynomial& p, double lo, double hi, int cells = bracket_cells) {
  std::vector<double> out;
  if (p.is_constant() || !(hi > lo)) return out;
  double x0 = lo;
  double f0 = p(x0);
  for (int i = 1; i <= cells; ++i) {
    const double x1 = lo + (hi - lo) * i / cells;
    const double f1 = p(x1);
    if (f1 == 0.0 && i < cells) {
      out.push_back(x1);
    } else if (f0 != 0.0 && (f0 < 0) != (f1 < 0) && f1 != 0.0) {
      out.push_back(bisect(p, x0, x1));
    }
    x0 = x1;
    f0 = f1;
  }
  // A zero at a cell edge is followed by no sign flip check against it; collapse near-duplicates.
  out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < 1e-14; }), out.end());
  return out;
}

/// Partition [lo, hi] into runs on which a function whose derivative has the sign
/// of `slope` is monotone.
inline std::vector<double> monotone_breaks_from_slope(const Polynomial& slope, double lo, double hi) {
  std::vector<double> pts{lo};
  for (double c : sign_changes(slope, lo, hi))
    if (c > pts.back()) pts.push_back(c);
  if (hi > pts.back()) pts.push_back(hi);
  return pts;
}

inline std::vector<double> monotone_breaks(const Polynomial& p, double lo, double hi) {
  return monotone_breaks_from_slope(p.derivative(), lo, hi);
}

} // namespace roots

/// Continuous function on [0,1] that is polynomial between consecutive breakpoints.
/// Each piece is expressed in the global variable alpha, not a local offset.
class PiecewisePoly {
public:
  PiecewisePoly(Polynomial single) : breaks_{0.0, 1.0}, pieces_{std::move(single)} {}

  PiecewisePoly(std::vector<double> breaks, std::vector<Polynomial> pieces)
      : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
    if (breaks_.size() != pieces_.size() + 1 || pieces_.empty())
      throw DomainError("piecewise polynomial needs one more breakpoint than pieces");
    if (breaks_.front() != 0.0 || breaks_.back() != 1.0) throw DomainError("pieces must tile [0,1]");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
      if (!(breaks_[i] > breaks_[i - 1])) throw DomainError("breakpoints must be strictly increasing");
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
      const double x = breaks_[i];
      const double l = pieces_[i - 1](x);
      const double r = pieces_[i](x);
      if (std::abs(l - r) > 1e-9 * (1.0 + std::abs(l))) throw DomainError("piecewise polynomial is discontinuous");
    }
  }

  const std::vector<double>& breaks() const noexcept { return breaks_; }
  const std::vector<Polynomial>& pieces() const noexcept { return pieces_; }
  std::size_t size() const noexcept { return pieces_.size(); }

  double lo(std::size_t i) const { return breaks_[i]; }
  double hi(std::size_t i) const { return breaks_[i + 1]; }

  std::size_t piece_index(double alpha) const {
    auto it = std::upper_bound(breaks_.begin() + 1, breaks_.end() - 1, alpha);
    return static_cast<std::size_t>(it - (breaks_.begin() + 1));
  }

  double operator()(double alpha) const { return pieces_[piece_index(alpha)](alpha); }

  int degree() const {
    int d = 0;
    for (const auto& p : pieces_) d = std::max(d, p.degree());
    return d;
  }

  /// Re-expresses both functions on the union of their breakpoints.
  static std::pair<PiecewisePoly, PiecewisePoly> align(const PiecewisePoly& f, const PiecewisePoly& g) {
    std::vector<double> merged;
    std::set_union(f.breaks_.begin(), f.breaks_.end(), g.breaks_.begin(), g.breaks_.end(), std::back_inserter(merged));
    std::vector<Polynomial> fp, gp;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
      const double mid = 0.5 * (merged[i] + merged[i + 1]);
      fp.push_back(f.pieces_[f.piece_index(mid)]);
      gp.push_back(g.pieces_[g.piece_index(mid)]);
    }
    return {PiecewisePoly(merged, std::move(fp)), PiecewisePoly(merged, std::move(gp))};
  }

  template <class Op>
  static PiecewisePoly combine(const PiecewisePoly& f, const PiecewisePoly& g, Op op) {
    auto [fa, ga] = align(f, g);
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < fa.size(); ++i) out.push_back(op(fa.pieces_[i], ga.pieces_[i]));
    return PiecewisePoly(fa.breaks_, std::move(out));
  }

  PiecewisePoly scaled(double s) const {
    std::vector<Polynomial> out;
    for (const auto& p : pieces_) out.push_back(s * p);
    return PiecewisePoly(breaks_, std::move(out));
  }

  /// Ascending alphas splitting [0,1] into runs on which the function is monotone.
  std::vector<double> monotone_breaks() const {
    std::vector<double> pts{0.0};
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      auto run = roots::monotone_breaks(pieces_[i], lo(i), hi(i));
      pts.insert(pts.end(), run.begin() + 1, run.end());
    }
    return pts;
  }

  friend bool operator==(const PiecewisePoly&, const PiecewisePoly&) = default;

private:
  std::vector<double> breaks_;
  std::vector<Polynomial> pieces_;
};

enum class Monotonicity { increasing, decreasing, constant, non_monotone };

namespace detail {

inline double run_tolerance(double a, double b) { return 1e-12 * (1.0 + std::abs(a) + std::abs(b)); }

} // namespace detail

/// Monotone behaviour of f over [0,1], decided from its monotone runs.
template <class F>
Monotonicity monotonicity(const F& f, const std::vector<double>& runs) {
  bool up = false;
  bool down = false;
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    const double a = f(runs[i]);
    const double b = f(runs[i + 1]);
    const double tol = detail::run_tolerance(a, b);
    if (b - a > tol) up = true;
    if (a - b > tol) down = true;
  }
  if (up && down) return Monotonicity::non_monotone;
  if (up) return Monotonicity::increasing;
  if (down) return Monotonicity::decreasing;
  return Monotonicity::constant;
}

inline Monotonicity monotonicity(const PiecewisePoly& f) { return monotonicity(f, f.monotone_breaks()); }

/// Two alphas at which a non-monotone function takes the same value.
struct RepeatedValue {
  double alpha_first;
  double alpha_second;
  double value;
};

/// For a non-monotone f with monotone runs `runs`, finds the first turning point
/// and pairs a value attained on both adjacent runs, preferring a run endpoint.
template <class F>
std::optional<RepeatedValue> repeated_value(const F& f, const std::vector<double>& runs) {
  for (std::size_t i = 0; i + 2 < runs.size(); ++i) {
    const double x0 = runs[i];
    const double xc = runs[i + 1];
    const double x1 = runs[i + 2];
    const double f0 = f(x0);
    const double fc = f(xc);
    const double f1 = f(x1);
    const bool peak = fc > f0 && fc > f1;
    const bool trough = fc < f0 && fc < f1;
    if (!peak && !trough) continue;
    // The value closer to the turning point is attained on both runs.
    const bool left_inner = peak ? f0 >= f1 : f0 <= f1;
    const double target = left_inner ? f0 : f1;
    auto shifted = [&](double x) { return f(x) - target; };
    if (left_inner) {
      const double other = (f1 == target) ? x1 : roots::bisect(shifted, xc, x1);
      return RepeatedValue{x0, other, target};
    }
    const double other = (f0 == target) ? x0 : roots::bisect(shifted, x0, xc);
    return RepeatedValue{other, x1, target};
  }
  return std::nullopt;
}

} // namespace tofn
