#pragma once

#include <algorithm>
#include <charconv>
#include <locale>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "extended_real.hpp"
#include "ofn.hpp"

namespace tofn {

/// Shortest round-trip decimal form, independent of the global locale.
/// Infinities print as "inf" and "-inf"; negative zero prints as "0".
inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string format_number(ExtendedReal v) { return format_number(v.value()); }

namespace detail {

inline std::string base_symbol(const std::string& tag) {
  if (tag == "identity") return "x";
  if (tag == "sqrt") return "sqrt(x)";
  if (tag == "gaussian") return "sqrt(-2log(x))";
  if (tag == "exponential") return "log(x)";
  return tag + "(x)";
}

inline std::string render_side(double a, double b, const std::string& symbol) {
  if (a == 0.0) return format_number(b);
  std::string out;
  if (a == 1.0)
    out = symbol;
  else if (a == -1.0)
    out = "-" + symbol;
  else
    out = format_number(a) + (symbol == "x" ? "" : "*") + symbol;
  if (b > 0)
    out += " + " + format_number(b);
  else if (b < 0)
    out += " - " + format_number(-b);
  return out;
}

} // namespace detail

/// Side functions in the usual pair notation, e.g. "(2x, -2x)" or "(x - 25, x - 9)".
inline std::string render_sides(const TypedOfn& x) {
  const std::string sym = detail::base_symbol(x.tag());
  const auto& t = x.tuple();
  return "(" + detail::render_side(t.a_up, t.b_up, sym) + ", " + detail::render_side(t.a_dn, t.b_dn, sym) + ")";
}

/// CSV with header `alpha,up,down` and `points` uniform alpha samples from 0 to 1.
inline void write_csv(std::ostream& os, const TypedOfn& x, int points) {
  if (points < 2) throw DomainError("sampling needs at least two points");
  os << "alpha,up,down\n";
  for (int i = 0; i < points; ++i) {
    const double a = i == points - 1 ? 1.0 : static_cast<double>(i) / (points - 1);
    os << format_number(a) << ',' << format_number(side_eval(x, Side::up, a)) << ','
       << format_number(side_eval(x, Side::down, a)) << '\n';
  }
}

/// Self-contained 640x480 SVG: alpha on the abscissa, side values on the
/// ordinate, arrowheads marking the traversal up the up side and down the down side.
inline std::string render_svg(const TypedOfn& x) {
  constexpr int samples = 200;
  constexpr double width = 640, height = 480, margin = 50;
  struct Pt {
    double alpha, value;
  };
  std::vector<Pt> up, dn;
  for (int i = 0; i <= samples; ++i) {
    const double a = static_cast<double>(i) / samples;
    const ExtendedReal u = side_eval(x, Side::up, a), d = side_eval(x, Side::down, a);
    if (u.is_finite()) up.push_back({a, u.value()});
    if (d.is_finite()) dn.push_back({a, d.value()});
  }
  double lo = up.front().value, hi = lo;
  for (const auto* curve : {&up, &dn})
    for (const auto& p : *curve) {
      lo = std::min(lo, p.value);
      hi = std::max(hi, p.value);
    }
  if (hi - lo < 1e-12) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.1 * (hi - lo);
  lo -= pad;
  hi += pad;
  auto px = [&](double a) { return margin + a * (width - 2 * margin); };
  auto py = [&](double v) { return height - margin - (v - lo) / (hi - lo) * (height - 2 * margin); };

  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n"
     << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"8\" markerHeight=\"8\" "
        "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" style=\"fill:#1f4fbf\"/></marker></defs>\n"
     << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" style=\"fill:white\"/>\n";
  const double zero_y = (lo <= 0 && 0 <= hi) ? py(0.0) : height - margin;
  os << "<line x1=\"" << margin << "\" y1=\"" << zero_y << "\" x2=\"" << width - margin << "\" y2=\"" << zero_y
     << "\" style=\"stroke:#444;stroke-width:1\"/>\n"
     << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
     << "\" style=\"stroke:#444;stroke-width:1\"/>\n"
     << "<text x=\"" << width - margin + 5 << "\" y=\"" << zero_y + 4 << "\" style=\"font:14px sans-serif\">alpha</text>\n"
     << "<text x=\"" << margin - 40 << "\" y=\"" << margin - 10 << "\" style=\"font:12px sans-serif\">"
     << format_number(hi) << "</text>\n"
     << "<text x=\"" << margin - 40 << "\" y=\"" << height - margin + 15 << "\" style=\"font:12px sans-serif\">"
     << format_number(lo) << "</text>\n";

  auto polyline = [&](const std::vector<Pt>& pts, const char* colour, const char* name) {
    os << "<polyline class=\"" << name << "\" style=\"fill:none;stroke:" << colour << ";stroke-width:2\" points=\"";
    for (const auto& p : pts) os << px(p.alpha) << ',' << py(p.value) << ' ';
    os << "\"/>\n";
  };
  // Arrow segments at about 31% and 71% of each curve; the down side is walked from alpha = 1 to 0.
  auto arrows = [&](const std::vector<Pt>& pts, bool reverse) {
    if (pts.size() < 4) return;
    for (double frac : {0.31, 0.71}) {
      const auto i = static_cast<std::size_t>(frac * static_cast<double>(pts.size() - 2));
      const Pt& a = reverse ? pts[i + 1] : pts[i];
      const Pt& b = reverse ? pts[i] : pts[i + 1];
      os << "<line x1=\"" << px(a.alpha) << "\" y1=\"" << py(a.value) << "\" x2=\"" << px(b.alpha) << "\" y2=\""
         << py(b.value) << "\" style=\"stroke:#1f4fbf;stroke-width:2\" marker-end=\"url(#arrow)\"/>\n";
    }
  };
  polyline(up, "#1f4fbf", "up");
  polyline(dn, "#bf1f1f", "down");
  arrows(up, false);
  arrows(dn, true);
  os << "<text x=\"" << margin + 10 << "\" y=\"" << 25 << "\" style=\"font:14px sans-serif\">"
     << render_sides(x) << "</text>\n</svg>\n";
  return os.str();
}

} // namespace tofn
