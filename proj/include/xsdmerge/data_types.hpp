#pragma once

// Compatibility of built-in data types, modelled as a forest: each type
// points at the next more general one. Two types are compatible when they
// share an ancestor; ID, IDREF, IDREFS and the date/time types stand alone.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xsdmerge/error.hpp"

namespace xsdmerge {

namespace detail {

inline const std::map<std::string, std::string, std::less<>>& type_parents() {
  static const std::map<std::string, std::string, std::less<>> parents = {
      {"byte", "short"},
      {"short", "int"},
      {"int", "long"},
      {"long", "integer"},
      {"integer", "decimal"},
      {"unsignedByte", "unsignedShort"},
      {"unsignedShort", "unsignedInt"},
      {"unsignedInt", "unsignedLong"},
      {"unsignedLong", "nonNegativeInteger"},
      {"positiveInteger", "nonNegativeInteger"},
      {"nonNegativeInteger", "integer"},
      {"negativeInteger", "nonPositiveInteger"},
      {"nonPositiveInteger", "integer"},
      {"float", "double"},
      {"NCName", "Name"},
      {"Name", "token"},
      {"NMTOKEN", "token"},
      {"language", "token"},
      {"token", "normalizedString"},
      {"normalizedString", "string"},
      {"anyURI", "string"},
  };
  return parents;
}

/// The type followed by its ancestors, most specific first.
inline std::vector<std::string> type_chain(std::string_view t) {
  std::vector<std::string> chain{std::string(t)};
  const auto& parents = type_parents();
  for (auto it = parents.find(t); it != parents.end(); it = parents.find(it->second)) chain.push_back(it->second);
  return chain;
}

inline std::optional<std::string> common_ancestor(std::string_view a, std::string_view b) {
  auto chain_b = type_chain(b);
  for (const auto& t : type_chain(a)) {
    for (const auto& u : chain_b) {
      if (t == u) return t;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline bool compatible_types(std::string_view a, std::string_view b) {
  return detail::common_ancestor(a, b).has_value();
}

/// The more general of two compatible types (their least common ancestor
/// when neither generalizes the other).
inline std::string merge_type(std::string_view a, std::string_view b) {
  if (auto t = detail::common_ancestor(a, b)) return *t;
  throw Error(ErrorCode::IncompatibleTypes, "'" + std::string(a) + "' and '" + std::string(b) + "'");
}

}  // namespace xsdmerge
