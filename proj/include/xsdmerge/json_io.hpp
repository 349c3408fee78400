#pragma once

// JSON documents exchanged by the command-line tool. Key order is fixed so
// identical inputs give byte-identical output.

#include <string>
#include <vector>

#include "json.hpp"

#include "xsdmerge/dictionaries.hpp"
#include "xsdmerge/integrator.hpp"
#include "xsdmerge/interscheme.hpp"

namespace xsdmerge::json_io {

using Json = nlohmann::ordered_json;

inline std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Json pair_json(const XComponent& left, const XComponent& right) {
  Json j;
  j["left"] = left.name;
  j["right"] = right.name;
  j["left_typology"] = std::string(to_string(left.typology));
  j["right_typology"] = std::string(to_string(right.typology));
  return j;
}

inline Json to_json(const PropertySet& props) {
  Json j;
  j["severity"] = props.severity;
  j["synonymies"] = Json::array();
  for (const auto& s : props.synonymies) {
    auto item = pair_json(s.left, s.right);
    item["phi"] = Json::array();
    item["phi_exact"] = Json::array();
    for (const auto& value : s.phi) {
      item["phi"].push_back(boost::rational_cast<double>(value));
      item["phi_exact"].push_back(rational_text(value));
    }
    j["synonymies"].push_back(std::move(item));
  }
  j["homonymies"] = Json::array();
  for (const auto& h : props.homonymies) j["homonymies"].push_back(pair_json(h.left, h.right));
  return j;
}

inline Json to_json(const MergeDictionary& md) {
  Json arr = Json::array();
  for (const auto& p : md.pairs) {
    auto item = pair_json(p.left, p.right);
    item["context"] = Json::array();
    for (const auto& [l, r] : p.context) item["context"].push_back(Json{{"left", l}, {"right", r}});
    arr.push_back(std::move(item));
  }
  return arr;
}

inline Json to_json(const RenameDictionary& rd) {
  Json arr = Json::array();
  for (const auto& p : rd.pairs) arr.push_back(pair_json(p.left, p.right));
  return arr;
}

inline Json audit_json(const IntegrationResult& result) {
  Json j;
  j["schema_id"] = result.schema.schema_id();
  auto merges = [](const std::vector<ElementMerge>& list) {
    Json arr = Json::array();
    for (const auto& m : list) arr.push_back(Json{{"left", m.left}, {"right", m.right}, {"merged", m.merged}});
    return arr;
  };
  j["element_merges"] = merges(result.plan.element_merges);
  j["attribute_merges"] = merges(result.plan.attribute_merges);
  j["absorbed_attributes"] = Json::array();
  for (const auto& a : result.plan.element_absorbs_attribute) {
    j["absorbed_attributes"].push_back(
        Json{{"element", a.element}, {"attribute", a.attribute}, {"schema_id", a.schema_id}});
  }
  j["renames"] = Json::array();
  for (const auto& r : result.plan.renames) {
    j["renames"].push_back(Json{{"schema_id", r.schema_id}, {"from", r.from}, {"to", r.to}});
  }
  j["mapping"] = Json::array();
  for (const auto& e : result.audit) {
    j["mapping"].push_back(Json{{"schema_id", e.schema_id},
                                {"name", e.name},
                                {"typology", std::string(to_string(e.typology))},
                                {"action", e.action},
                                {"result_name", e.result_name},
                                {"result_typology", std::string(to_string(e.result_typology))}});
  }
  return j;
}

}  // namespace xsdmerge::json_io
