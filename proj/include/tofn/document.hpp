#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "base.hpp"
#include "errors.hpp"
#include "ofn.hpp"
#include "path_algebra.hpp"

namespace tofn {

using json = nlohmann::json;

/// {"base": "<tag>", "tuple": [a_up, b_up, a_dn, b_dn]}
inline json to_document(const TypedOfn& x) {
  const auto& t = x.tuple();
  return json{{"base", x.tag()}, {"tuple", {t.a_up, t.b_up, t.a_dn, t.b_dn}}};
}

inline TypedOfn ofn_from_document(const json& doc, const BaseRegistry& registry = BaseRegistry::builtin()) {
  if (!doc.is_object()) throw DocumentError("OFN document must be a JSON object");
  if (!doc.contains("base") || !doc["base"].is_string()) throw DocumentError("OFN document needs a string 'base'");
  if (!doc.contains("tuple") || !doc["tuple"].is_array() || doc["tuple"].size() != 4)
    throw DocumentError("OFN document needs a 4-element 'tuple'");
  double v[4];
  for (std::size_t i = 0; i < 4; ++i) {
    if (!doc["tuple"][i].is_number()) throw DocumentError("tuple entries must be numbers");
    v[i] = doc["tuple"][i].get<double>();
  }
  BaseRef base;
  try {
    base = registry.find(doc["base"].get<std::string>());
  } catch (const UnknownBase& e) {
    throw DocumentError(e.what());
  }
  return {base, {v[0], v[1], v[2], v[3]}};
}

inline TypedOfn parse_ofn_document(const std::string& text, const BaseRegistry& registry = BaseRegistry::builtin()) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return ofn_from_document(doc, registry);
}

/// {"nodes": n, "edges": [{"from": i, "to": j, "weight": <OFN document>}, ...]}
/// Mixed-base weights surface as MixedTypeError from the graph constructor.
inline FuzzyDigraph graph_from_document(const json& doc, const BaseRegistry& registry = BaseRegistry::builtin()) {
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_number_unsigned())
    throw DocumentError("graph document needs a non-negative integer 'nodes'");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw DocumentError("graph document needs an 'edges' array");
  std::vector<FuzzyEdge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("weight") ||
        !e["from"].is_number_unsigned() || !e["to"].is_number_unsigned())
      throw DocumentError("edge needs unsigned 'from', 'to' and a 'weight' document");
    edges.push_back({e["from"].get<std::size_t>(), e["to"].get<std::size_t>(), ofn_from_document(e["weight"], registry)});
  }
  const auto n = doc["nodes"].get<std::size_t>();
  for (const auto& e : edges)
    if (e.from >= n || e.to >= n) throw DocumentError("edge endpoint out of range");
  return FuzzyDigraph(n, std::move(edges));
}

inline json to_document(const FuzzyDigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", to_document(e.weight)}});
  return json{{"nodes", g.nodes()}, {"edges", edges}};
}

} // namespace tofn
