#pragma once

// Correctness (precision) and completeness (recall) of returned properties
// against a hand-made gold standard.

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "json.hpp"

#include "xsdmerge/error.hpp"

namespace xsdmerge {

enum class PropertyKind { Synonymy, Homonymy };

/// Property identity: kind plus the unordered pair of names.
struct PropertyKey {
  PropertyKind kind = PropertyKind::Synonymy;
  std::string first;
  std::string second;

  PropertyKey(PropertyKind k, std::string a, std::string b) : kind(k), first(std::move(a)), second(std::move(b)) {
    if (second < first) std::swap(first, second);
  }

  auto operator<=>(const PropertyKey&) const = default;
};

using PropertyKeys = std::set<PropertyKey>;

/// Expected properties. Same layout as the match output without phi values.
struct GoldStandard {
  PropertyKeys properties;
};

/// Reads the synonymies/homonymies arrays of a match output or gold file.
inline PropertyKeys read_property_keys(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::FormatError, "expected a JSON object");
  PropertyKeys keys;
  auto read = [&](const char* field, PropertyKind kind) {
    if (!doc.contains(field)) return;
    const auto& arr = doc.at(field);
    if (!arr.is_array()) throw Error(ErrorCode::FormatError, std::string("'") + field + "' must be an array");
    for (const auto& item : arr) {
      if (!item.is_object() || !item.contains("left") || !item.contains("right") || !item["left"].is_string() ||
          !item["right"].is_string()) {
        throw Error(ErrorCode::FormatError, std::string("entries of '") + field + "' need string left/right");
      }
      keys.emplace(kind, item["left"].get<std::string>(), item["right"].get<std::string>());
    }
  };
  read("synonymies", PropertyKind::Synonymy);
  read("homonymies", PropertyKind::Homonymy);
  return keys;
}

inline GoldStandard read_gold(const nlohmann::json& doc) { return {read_property_keys(doc)}; }

struct EvalMetrics {
  std::size_t returned = 0;
  std::size_t gold = 0;
  std::size_t agreeing = 0;
  double correctness = 0.0;
  double completeness = 0.0;
  bool empty_returned = false;  // correctness reported as 1 by convention
};

/// Precondition: gold is non-empty.
inline EvalMetrics evaluate(const PropertyKeys& returned, const GoldStandard& gold) {
  EvalMetrics m;
  m.returned = returned.size();
  m.gold = gold.properties.size();
  for (const auto& k : returned) m.agreeing += gold.properties.count(k);
  m.empty_returned = returned.empty();
  m.correctness = m.empty_returned ? 1.0 : static_cast<double>(m.agreeing) / static_cast<double>(m.returned);
  m.completeness = static_cast<double>(m.agreeing) / static_cast<double>(m.gold);
  return m;
}

inline std::string two_decimals(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace xsdmerge
