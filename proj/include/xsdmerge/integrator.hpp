#pragma once

// Builds the global schema from two schemas and their dictionaries:
// concatenate, merge dictionary pairs, rewrite references, rename homonyms,
// and unify the roots.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "xsdmerge/data_types.hpp"
#include "xsdmerge/dictionaries.hpp"
#include "xsdmerge/schema_model.hpp"

namespace xsdmerge {

struct IntegrateOptions {
  std::string root_name = "root";
  std::string schema_id = "SG";
};

struct ElementMerge {
  std::string left;
  std::string right;
  std::string merged;
};

struct Absorption {
  std::string element;    // simple element kept in the global schema
  std::string attribute;  // attribute folded into it
  std::string schema_id;  // schema that declared the attribute
};

struct Rename {
  std::string schema_id;
  std::string from;
  std::string to;
};

struct MergePlan {
  std::vector<ElementMerge> element_merges;
  std::vector<ElementMerge> attribute_merges;
  std::vector<Absorption> element_absorbs_attribute;
  std::vector<Rename> renames;
};

/// Where one source component ended up.
struct AuditEntry {
  std::string schema_id;
  std::string name;
  Typology typology = Typology::SimpleElement;
  std::string action;  // kept | merged | renamed | absorbed
  std::string result_name;
  Typology result_typology = Typology::SimpleElement;
};

struct IntegrationResult {
  SchemaModel schema;
  MergePlan plan;
  std::vector<AuditEntry> audit;
};

namespace detail {

struct GlobalNode {
  XComponent decl;
  int origin = 1;  // 1 or 2
  bool live = true;
  std::vector<std::string> sources1;  // complex sources from the first schema
  std::vector<std::string> sources2;
};

inline ComplexContent combine_contents(const std::optional<ComplexContent>& a, const std::optional<ComplexContent>& b) {
  if (!a || !b) return a ? *a : *b;
  ComplexContent out;
  out.compositor =
      a->compositor == Compositor::All && b->compositor == Compositor::All ? Compositor::All : Compositor::Sequence;
  auto find_child = [](const ComplexContent& c, const std::string& t) -> const ChildRef* {
    for (const auto& r : c.children) {
      if (r.target == t) return &r;
    }
    return nullptr;
  };
  // Children present in only one merged parent become optional.
  for (const auto& r : a->children) {
    if (const auto* other = find_child(*b, r.target)) {
      out.children.push_back({r.target, std::min(r.min_occurs, other->min_occurs),
                              std::max(r.max_occurs, other->max_occurs)});
    } else {
      out.children.push_back({r.target, 0, r.max_occurs});
    }
  }
  for (const auto& r : b->children) {
    if (!find_child(*a, r.target)) out.children.push_back({r.target, 0, r.max_occurs});
  }
  auto find_attr = [](const ComplexContent& c, const std::string& t) -> const AttributeUse* {
    for (const auto& u : c.attributes) {
      if (u.target == t) return &u;
    }
    return nullptr;
  };
  for (const auto& u : a->attributes) {
    const auto* other = find_attr(*b, u.target);
    out.attributes.push_back({u.target, other != nullptr && u.required && other->required});
  }
  for (const auto& u : b->attributes) {
    if (!find_attr(*a, u.target)) out.attributes.push_back({u.target, false});
  }
  return out;
}

}  // namespace detail

inline IntegrationResult integrate_with_audit(const SchemaModel& s1, const SchemaModel& s2, const MergeDictionary& md,
                                              const RenameDictionary& rd, const IntegrateOptions& options = {}) {
  using detail::GlobalNode;
  auto resolve = [](const SchemaModel& s, const XComponent& x) {
    auto i = s.index_of(x.name, x.typology);
    if (!i) {
      throw Error(ErrorCode::InconsistentDictionary, "'" + x.name + "' [" + std::string(to_string(x.typology)) +
                                                         "] is not declared in '" + s.schema_id() + "'");
    }
    return *i;
  };

  const auto n1 = s1.components().size();
  const auto n2 = s2.components().size();
  std::vector<std::optional<std::size_t>> partner1(n1), partner2(n2);
  for (const auto& p : md.pairs) {
    auto i = resolve(s1, p.left);
    auto j = resolve(s2, p.right);
    const bool c1 = p.left.typology == Typology::ComplexElement;
    const bool c2 = p.right.typology == Typology::ComplexElement;
    if (c1 != c2) throw Error(ErrorCode::InconsistentDictionary, "pair " + p.left.name + "/" + p.right.name +
                                                                     " mixes complex and non-complex components");
    if (partner1[i] || partner2[j]) {
      throw Error(ErrorCode::InconsistentDictionary, "pair " + p.left.name + "/" + p.right.name +
                                                         " breaks the one-to-one merge requirement");
    }
    partner1[i] = j;
    partner2[j] = i;
  }
  for (const auto& p : rd.pairs) {
    resolve(s1, p.left);
    resolve(s2, p.right);
  }

  IntegrationResult result{SchemaModel(options.schema_id), {}, {}};
  std::vector<GlobalNode> nodes;
  std::vector<std::size_t> rep1(n1), rep2(n2);

  // Rough global schema: everything from the first schema, then the second.
  for (std::size_t i = 0; i < n1; ++i) {
    const auto& c = s1.components()[i];
    GlobalNode node{c, 1, true, {}, {}};
    if (c.typology == Typology::ComplexElement) node.sources1.push_back(c.name);
    rep1[i] = nodes.size();
    nodes.push_back(std::move(node));
  }
  for (std::size_t j = 0; j < n2; ++j) {
    const auto& c = s2.components()[j];
    if (!partner2[j]) {
      GlobalNode node{c, 2, true, {}, {}};
      if (c.typology == Typology::ComplexElement) node.sources2.push_back(c.name);
      rep2[j] = nodes.size();
      nodes.push_back(std::move(node));
      continue;
    }
    const auto i = *partner2[j];
    const auto& x1 = s1.components()[i];
    auto& merged = nodes[rep1[i]];
    if (c.typology == Typology::ComplexElement) {
      merged.sources2.push_back(c.name);
      rep2[j] = rep1[i];
      result.plan.element_merges.push_back({x1.name, c.name, x1.name});
    } else if (x1.typology == c.typology) {
      merged.decl.data_type = merge_type(*x1.data_type, *c.data_type);
      rep2[j] = rep1[i];
      auto& list = c.typology == Typology::Attribute ? result.plan.attribute_merges : result.plan.element_merges;
      list.push_back({x1.name, c.name, x1.name});
    } else if (x1.typology == Typology::SimpleElement) {
      // Attribute from the second schema folds into the first schema's element.
      merged.decl.data_type = merge_type(*x1.data_type, *c.data_type);
      rep2[j] = rep1[i];
      result.plan.element_absorbs_attribute.push_back({x1.name, c.name, s2.schema_id()});
    } else {
      // Attribute from the first schema folds into the second schema's element.
      GlobalNode node{c, 2, true, {}, {}};
      node.decl.data_type = merge_type(*x1.data_type, *c.data_type);
      merged.live = false;
      rep2[j] = nodes.size();
      rep1[i] = nodes.size();
      nodes.push_back(std::move(node));
      result.plan.element_absorbs_attribute.push_back({c.name, x1.name, s1.schema_id()});
    }
  }

  // Name uniqueness: homonyms from the second schema get a numeric suffix.
  auto taken = [&](const std::string& name, bool element, std::size_t self) {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k != self && nodes[k].live && is_element(nodes[k].decl.typology) == element && nodes[k].decl.name == name) {
        return true;
      }
    }
    return false;
  };
  auto rename = [&](std::size_t k) {
    auto& node = nodes[k];
    const bool element = is_element(node.decl.typology);
    std::string candidate;
    for (int suffix = 2;; ++suffix) {
      candidate = node.decl.name + "_" + std::to_string(suffix);
      if (!taken(candidate, element, k)) break;
    }
    result.plan.renames.push_back({node.origin == 1 ? s1.schema_id() : s2.schema_id(), node.decl.name, candidate});
    node.decl.name = candidate;
  };
  std::set<std::size_t> renamed;
  for (const auto& p : rd.pairs) {
    auto k = rep2[resolve(s2, p.right)];
    if (nodes[k].origin == 2 && k != rep1[resolve(s1, p.left)] && !renamed.count(k)) {
      rename(k);
      renamed.insert(k);
    }
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k].live && taken(nodes[k].decl.name, is_element(nodes[k].decl.typology), k)) {
      // Only reachable when an earlier node already holds the name.
      bool earlier = false;
      for (std::size_t e = 0; e < k; ++e) {
        earlier |= nodes[e].live && is_element(nodes[e].decl.typology) == is_element(nodes[k].decl.typology) &&
                   nodes[e].decl.name == nodes[k].decl.name;
      }
      if (earlier) rename(k);
    }
  }

  // Rewrite a source content in terms of global names; attribute uses whose
  // attribute folded into an element become child refs.
  auto map_content = [&](const SchemaModel& s, const std::vector<std::size_t>& rep, const std::string& name) {
    const auto& src = s.content(name);
    ComplexContent out;
    out.compositor = src.compositor;
    auto add_child = [&out](ChildRef r) {
      for (auto& existing : out.children) {
        if (existing.target == r.target) {
          existing.min_occurs = std::min(existing.min_occurs, r.min_occurs);
          existing.max_occurs = std::max(existing.max_occurs, r.max_occurs);
          return;
        }
      }
      out.children.push_back(std::move(r));
    };
    for (const auto& r : src.children) {
      const auto& target = *s.find_element(r.target);
      const auto& node = nodes[rep[*s.index_of(target.name, target.typology)]];
      add_child({node.decl.name, r.min_occurs, r.max_occurs});
    }
    for (const auto& u : src.attributes) {
      const auto& node = nodes[rep[*s.index_of(u.target, Typology::Attribute)]];
      if (node.decl.typology == Typology::Attribute) {
        bool seen = false;
        for (auto& existing : out.attributes) {
          if (existing.target == node.decl.name) {
            existing.required = existing.required || u.required;
            seen = true;
          }
        }
        if (!seen) out.attributes.push_back({node.decl.name, u.required});
      } else {
        add_child({node.decl.name, u.required ? 1u : 0u, 1u});
      }
    }
    return out;
  };

  for (auto& node : nodes) {
    if (!node.live) continue;
    result.schema.add(XComponent{node.decl.name, node.decl.typology, node.decl.data_type, {}});
    if (node.decl.typology != Typology::ComplexElement) continue;
    std::optional<ComplexContent> a, b;
    if (!node.sources1.empty()) a = map_content(s1, rep1, node.sources1.front());
    if (!node.sources2.empty()) b = map_content(s2, rep2, node.sources2.front());
    result.schema.content(node.decl.name) = detail::combine_contents(a, b);
  }

  // Root unification.
  auto roots = unreferenced_complex(result.schema);
  if (roots.size() != 1) {
    std::vector<std::string> children;
    if (roots.empty()) {
      for (const auto* r : unreferenced_complex(s1)) children.push_back(nodes[rep1[*s1.index_of(r->name, r->typology)]].decl.name);
      for (const auto* r : unreferenced_complex(s2)) children.push_back(nodes[rep2[*s2.index_of(r->name, r->typology)]].decl.name);
      if (children.empty()) {
        for (const auto& c : result.schema.components()) {
          if (c.typology == Typology::ComplexElement) {
            children.push_back(c.name);
            break;
          }
        }
      }
    } else {
      for (const auto* r : roots) children.push_back(r->name);
    }
    std::string root_name = options.root_name;
    for (int suffix = 2; result.schema.find_element(root_name); ++suffix) {
      root_name = options.root_name + "_" + std::to_string(suffix);
    }
    result.schema.add(XComponent{root_name, Typology::ComplexElement, std::nullopt, {}});
    auto& content = result.schema.content(root_name);
    content.compositor = Compositor::All;
    std::set<std::string> seen;
    for (const auto& c : children) {
      if (seen.insert(c).second) content.children.push_back({c, 0, 1});
    }
  }

  // Audit trail.
  auto audit = [&](const SchemaModel& s, const std::vector<std::size_t>& rep,
                   const std::vector<std::optional<std::size_t>>& partner) {
    for (std::size_t i = 0; i < s.components().size(); ++i) {
      const auto& c = s.components()[i];
      const auto& node = nodes[rep[i]];
      std::string action;
      if (node.decl.typology != c.typology) {
        action = "absorbed";
      } else if (partner[i]) {
        action = "merged";
      } else if (node.decl.name != c.name) {
        action = "renamed";
      } else {
        action = "kept";
      }
      result.audit.push_back({s.schema_id(), c.name, c.typology, action, node.decl.name, node.decl.typology});
    }
  };
  audit(s1, rep1, partner1);
  audit(s2, rep2, partner2);

  check_invariants(result.schema, ErrorCode::InconsistentDictionary);
  return result;
}

inline SchemaModel integrate(const SchemaModel& s1, const SchemaModel& s2, const MergeDictionary& md,
                             const RenameDictionary& rd, const IntegrateOptions& options = {}) {
  return integrate_with_audit(s1, s2, md, rd, options).schema;
}

struct MergedElement {
  std::string name;
  ComplexContent content;
};

/// The element produced by merging the dictionary pair (e1, e2), with
/// references expressed in global names.
inline MergedElement merge_complex(const SchemaModel& s1, const SchemaModel& s2, const std::string& e1,
                                   const std::string& e2, const MergeDictionary& md) {
  const auto* x1 = s1.find(e1, Typology::ComplexElement);
  const auto* x2 = s2.find(e2, Typology::ComplexElement);
  if (x1 == nullptr || x2 == nullptr || !md.contains(*x1, *x2)) {
    throw Error(ErrorCode::NotMerged, "(" + e1 + ", " + e2 + ") is not a merge dictionary pair");
  }
  auto schema = integrate(s1, s2, md, RenameDictionary{});
  return {e1, schema.content(e1)};
}

}  // namespace xsdmerge
