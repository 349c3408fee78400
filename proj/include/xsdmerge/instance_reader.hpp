#pragma once

// Resolves which declared elements IDREF/IDREFS attributes point at, by
// scanning instance documents. Schemas alone cannot tell.

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "xsdmerge/names.hpp"
#include "xsdmerge/schema_model.hpp"
#include "xsdmerge/xml.hpp"

namespace xsdmerge {

struct InstanceFailure {
  std::size_t document = 0;  // index into the input list
  std::string message;       // InstanceParseError text
};

struct RefTargetMap {
  /// IDREF/IDREFS attribute name -> complex element names it was seen to reference.
  std::map<std::string, std::set<std::string>> targets;
  std::size_t instances_scanned = 0;
  std::size_t unresolved = 0;
  std::vector<InstanceFailure> failures;

  const std::set<std::string>* targets_of(const std::string& attribute) const {
    auto it = targets.find(attribute);
    return it == targets.end() ? nullptr : &it->second;
  }
};

namespace detail {

struct IdScan {
  std::unordered_map<std::string, std::set<std::string>> ids;  // ID value -> element names
  std::vector<std::pair<std::string, std::string>> refs;       // (attribute, referenced value)

  void visit(const SchemaModel& model, const xml::Element& el) {
    const auto* decl = model.find_element(el.name);
    for (const auto& [key, value] : el.attributes) {
      const auto* attr = model.find_attribute(key);
      if (attr == nullptr) continue;
      if (attr->data_type == "ID") {
        if (decl != nullptr && decl->typology == Typology::ComplexElement) {
          ids[std::string(trim(value))].insert(decl->name);
        }
      } else if (is_idref_type(attr->data_type)) {
        std::istringstream tokens(value);
        std::string token;
        while (tokens >> token) refs.emplace_back(attr->name, token);
      }
    }
    for (const auto& child : el.children) visit(model, child);
  }
};

}  // namespace detail

/// Best-effort scan; a malformed document is reported in `failures` and the
/// others are still processed. IDs are resolved within their own document.
inline RefTargetMap resolve_idrefs(const SchemaModel& model, std::span<const std::string> documents) {
  RefTargetMap result;
  for (std::size_t i = 0; i < documents.size(); ++i) {
    auto [root, failure] = xml::parse(documents[i], /*namespaces=*/true);
    if (!root) {
      result.failures.push_back(
          {i, "InstanceParseError: " + failure.message + " (line " + std::to_string(failure.line) + ")"});
      continue;
    }
    detail::IdScan scan;
    scan.visit(model, *root);
    for (const auto& [attribute, value] : scan.refs) {
      auto it = scan.ids.find(value);
      if (it == scan.ids.end()) {
        ++result.unresolved;
        continue;
      }
      result.targets[attribute].insert(it->second.begin(), it->second.end());
    }
    ++result.instances_scanned;
  }
  return result;
}

}  // namespace xsdmerge
