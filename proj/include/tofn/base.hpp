#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "extended_real.hpp"

namespace tofn {

enum class Direction { increasing, decreasing };

inline int sign_of(Direction d) noexcept { return d == Direction::increasing ? 1 : -1; }

/// A strictly monotone generator h on (0,1] from which typed OFN sides a*h + b are built.
///
/// `eval` is only called on (0,1]; the alpha -> 0+ limit is carried separately in
/// `range_at_0` because it is infinite for the Gaussian and exponential bases.
/// `inverse` is only called on the interior of the range; the endpoints are
/// resolved by `inv_h` itself.
struct BaseFunction {
  std::string tag;
  std::function<double(double)> eval;
  std::function<double(double)> inverse;
  Direction direction = Direction::increasing;
  ExtendedReal range_at_0;
  double range_at_1 = 1.0;
  double integral01 = 0.5;

  /// Closure of h((0,1]) as an interval.
  Interval range() const { return Interval::hull(range_at_0, ExtendedReal(range_at_1)); }
  bool bounded() const { return range_at_0.is_finite(); }
};

using BaseRef = std::shared_ptr<const BaseFunction>;

namespace detail {

inline void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1], got " + std::to_string(alpha));
}

} // namespace detail

inline ExtendedReal eval_h(const BaseFunction& base, double alpha) {
  detail::check_alpha(alpha);
  if (alpha == 0.0) return base.range_at_0;
  return ExtendedReal(base.eval(alpha));
}

/// The alpha in [0,1] with h(alpha) = t.
inline double inv_h(const BaseFunction& base, ExtendedReal t) {
  if (!base.range().contains(t)) throw RangeError("value outside the range of base '" + base.tag + "'");
  if (t == base.range_at_0) return 0.0;
  if (t == ExtendedReal(base.range_at_1)) return 1.0;
  const double alpha = base.inverse(t.value());
  return std::clamp(alpha, 0.0, 1.0);
}

inline double integral_h(const BaseFunction& base) { return base.integral01; }

namespace bases {

inline BaseRef identity() {
  static const BaseRef b = std::make_shared<const BaseFunction>(BaseFunction{
      "identity", [](double a) { return a; }, [](double t) { return t; }, Direction::increasing,
      ExtendedReal(0.0), 1.0, 0.5});
  return b;
}

inline BaseRef sqrt() {
  static const BaseRef b = std::make_shared<const BaseFunction>(BaseFunction{
      "sqrt", [](double a) { return std::sqrt(a); }, [](double t) { return t * t; }, Direction::increasing,
      ExtendedReal(0.0), 1.0, 2.0 / 3.0});
  return b;
}

/// h(alpha) = sqrt(-2 log alpha), the inverse of the Gaussian bell exp(-t^2/2).
inline BaseRef gaussian() {
  static const BaseRef b = std::make_shared<const BaseFunction>(BaseFunction{
      "gaussian", [](double a) { return std::sqrt(-2.0 * std::log(a)); },
      [](double t) { return std::exp(-0.5 * t * t); }, Direction::decreasing, ExtendedReal::pos_infinity(), 0.0,
      std::sqrt(std::numbers::pi / 2.0)});
  return b;
}

/// h(alpha) = log alpha; sides a*log(alpha) + b invert to exponentials.
inline BaseRef exponential() {
  static const BaseRef b = std::make_shared<const BaseFunction>(BaseFunction{
      "exponential", [](double a) { return std::log(a); }, [](double t) { return std::exp(t); },
      Direction::increasing, ExtendedReal::neg_infinity(), 0.0, -1.0});
  return b;
}

} // namespace bases

/// Checks strict monotonicity of h on an n-point grid of (0,1] in the declared direction.
inline bool monotone_on_grid(const BaseFunction& base, int points = 1000) {
  double prev = base.eval(1.0 / points);
  for (int i = 2; i <= points; ++i) {
    const double cur = base.eval(static_cast<double>(i) / points);
    if (!std::isfinite(cur)) return false;
    const double step = cur - prev;
    if (base.direction == Direction::increasing ? !(step > 0) : !(step < 0)) return false;
    prev = cur;
  }
  return true;
}

/// Immutable lookup table of base functions by tag.
class BaseRegistry {
public:
  /// Registry holding identity, sqrt, gaussian and exponential. "gaussian-inverse"
  /// and "log" are accepted as aliases of the last two.
  static const BaseRegistry& builtin() {
    static const BaseRegistry r = [] {
      BaseRegistry reg;
      for (const auto& b : {bases::identity(), bases::sqrt(), bases::gaussian(), bases::exponential()})
        reg.bases_.emplace(b->tag, b);
      reg.aliases_.emplace("gaussian-inverse", "gaussian");
      reg.aliases_.emplace("log", "exponential");
      return reg;
    }();
    return r;
  }

  /// A copy of this registry extended with a user-defined base. The base must be
  /// strictly monotone on a 1000-point grid and have a finite value at alpha = 1.
  BaseRegistry with(BaseFunction base) const {
    if (base.tag.empty() || !base.eval || !base.inverse) throw DomainError("incomplete base function record");
    if (contains(base.tag)) throw DomainError("base tag already registered: " + base.tag);
    if (!std::isfinite(base.range_at_1) || std::abs(base.eval(1.0) - base.range_at_1) > 1e-12)
      throw DomainError("base '" + base.tag + "' disagrees with its declared h(1)");
    if (!monotone_on_grid(base)) throw DomainError("base '" + base.tag + "' is not strictly monotone");
    BaseRegistry copy = *this;
    auto tag = base.tag;
    copy.bases_.emplace(std::move(tag), std::make_shared<const BaseFunction>(std::move(base)));
    return copy;
  }

  bool contains(std::string_view tag) const {
    return bases_.count(std::string(tag)) != 0 || aliases_.count(std::string(tag)) != 0;
  }

  BaseRef find(std::string_view tag) const {
    std::string key(tag);
    if (auto a = aliases_.find(key); a != aliases_.end()) key = a->second;
    auto it = bases_.find(key);
    if (it == bases_.end()) throw UnknownBase("unknown base tag '" + std::string(tag) + "'");
    return it->second;
  }

  std::vector<BaseRef> all() const {
    std::vector<BaseRef> out;
    for (const auto& [_, b] : bases_) out.push_back(b);
    return out;
  }

private:
  std::map<std::string, BaseRef> bases_;
  std::map<std::string, std::string> aliases_;
};

} // namespace tofn
