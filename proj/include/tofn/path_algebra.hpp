#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "base.hpp"
#include "errors.hpp"
#include "ofn.hpp"

namespace tofn {

/// Defuzzified value: integral over alpha of the level-set midpoint,
/// (a_up + a_dn)/2 * integral_h + (b_up + b_dn)/2. Linear in the tuple.
inline double rank(const TypedOfn& x) {
  const auto& t = x.tuple();
  const double spread = 0.5 * (t.a_up + t.a_dn);
  return (spread == 0.0 ? 0.0 : spread * integral_h(x.base())) + 0.5 * (t.b_up + t.b_dn);
}

using Ranking = std::function<double(const TypedOfn&)>;

/// Selection-by-rank minimum; equal ranks resolve to the lexicographically smaller tuple.
inline const TypedOfn& ofn_min(const TypedOfn& x, const TypedOfn& y, const Ranking& by = rank) {
  if (x.tag() != y.tag() && !x.is_rectangular() && !y.is_rectangular())
    throw MixedTypeError("cannot compare '" + x.tag() + "' and '" + y.tag() + "' OFNs");
  const double rx = by(x), ry = by(y);
  if (rx != ry) return rx < ry ? x : y;
  return y.tuple() < x.tuple() ? y : x;
}

struct PointwiseMin {
  double alpha;
  ExtendedReal up;
  ExtendedReal down;
};

/// Side-by-side minima of two OFNs on a uniform alpha grid. The result is for
/// inspection only; it is generally not a typed OFN.
inline std::vector<PointwiseMin> pointwise_min_report(const TypedOfn& x, const TypedOfn& y, int grid) {
  if (x.tag() != y.tag() && !x.is_rectangular() && !y.is_rectangular())
    throw MixedTypeError("cannot compare '" + x.tag() + "' and '" + y.tag() + "' OFNs");
  if (grid < 2) throw DomainError("pointwise report needs at least two grid points");
  std::vector<PointwiseMin> out;
  for (int i = 0; i < grid; ++i) {
    const double a = static_cast<double>(i) / (grid - 1);
    out.push_back({a, min(side_eval(x, Side::up, a), side_eval(y, Side::up, a)),
                   min(side_eval(x, Side::down, a), side_eval(y, Side::down, a))});
  }
  return out;
}

struct FuzzyEdge {
  std::size_t from;
  std::size_t to;
  TypedOfn weight;
};

/// Directed graph whose arc weights all live in one typed ring.
class FuzzyDigraph {
public:
  FuzzyDigraph(std::size_t nodes, std::vector<FuzzyEdge> edges) : nodes_(nodes), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
      if (e.from >= nodes_ || e.to >= nodes_) throw DomainError("edge endpoint out of range");
      if (e.weight.is_rectangular()) continue;
      if (!base_)
        base_ = e.weight.base_ref();
      else if (base_->tag != e.weight.tag())
        throw MixedTypeError("graph mixes '" + base_->tag + "' and '" + e.weight.tag() + "' weights");
    }
    if (!base_) base_ = bases::identity();
  }

  std::size_t nodes() const noexcept { return nodes_; }
  const std::vector<FuzzyEdge>& edges() const noexcept { return edges_; }
  const BaseRef& base() const noexcept { return base_; }

private:
  std::size_t nodes_;
  std::vector<FuzzyEdge> edges_;
  BaseRef base_;
};

struct ShortestPaths {
  std::vector<std::optional<TypedOfn>> distance;
  std::vector<std::optional<std::size_t>> predecessor;
};

/// Bellman-Ford relaxation with add as path extension and ofn_min as summary.
/// Throws NegativeCycle when a reachable cycle has negative total rank.
inline ShortestPaths shortest_paths(const FuzzyDigraph& g, std::size_t source, const Ranking& by = rank) {
  if (source >= g.nodes()) throw DomainError("source node out of range");
  ShortestPaths sp;
  sp.distance.assign(g.nodes(), std::nullopt);
  sp.predecessor.assign(g.nodes(), std::nullopt);
  sp.distance[source] = crisp(0.0, g.base());

  auto improves = [&](const TypedOfn& cand, const std::optional<TypedOfn>& cur) {
    if (!cur) return true;
    const double rc = by(cand), ru = by(*cur);
    return rc < ru || (rc == ru && cand.tuple() < cur->tuple());
  };

  for (std::size_t round = 0; round + 1 < g.nodes(); ++round) {
    bool changed = false;
    for (const auto& e : g.edges()) {
      if (!sp.distance[e.from]) continue;
      TypedOfn cand = add(*sp.distance[e.from], e.weight);
      if (improves(cand, sp.distance[e.to])) {
        sp.distance[e.to] = std::move(cand);
        sp.predecessor[e.to] = e.from;
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (const auto& e : g.edges()) {
    if (!sp.distance[e.from] || !sp.distance[e.to]) continue;
    if (by(add(*sp.distance[e.from], e.weight)) < by(*sp.distance[e.to]))
      throw NegativeCycle("graph contains a cycle of negative total rank");
  }
  return sp;
}

} // namespace tofn
