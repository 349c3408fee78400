#pragma once

// Merge and Rename Dictionaries: one-to-one filtering of the raw properties.
// Complex elements are paired by a maximum-weight matching over their
// similarity degrees; attributes and simple elements follow their parents.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "xsdmerge/data_types.hpp"
#include "xsdmerge/interscheme.hpp"
#include "xsdmerge/matching.hpp"

namespace xsdmerge {

struct SimArc {
  std::size_t left = 0;   // index into SimGraph::left
  std::size_t right = 0;  // index into SimGraph::right
  Rational weight;
};

struct SimGraph {
  Severity severity = 0;
  std::vector<XComponent> left;   // complex elements of the first schema, by name
  std::vector<XComponent> right;  // complex elements of the second schema, by name
  std::vector<SimArc> arcs;       // ordered by (left, right)
};

inline SimGraph build_simg(const XsGraph& g1, const XsGraph& g2, Severity u, const Thesaurus& t) {
  check_severity(u, g1, g2);
  SimGraph sim;
  sim.severity = u;
  auto complex_of = [](const XsGraph& g) {
    std::vector<XComponent> out;
    for (const auto& c : g.nodes()) {
      if (c.typology == Typology::ComplexElement) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), ComponentOrder{});
    return out;
  };
  sim.left = complex_of(g1);
  sim.right = complex_of(g2);
  for (std::size_t i = 0; i < sim.left.size(); ++i) {
    for (std::size_t j = 0; j < sim.right.size(); ++j) {
      auto profile = phi_profile(sim.left[i], sim.right[j], u, g1, g2, t);
      if (profile.size() == static_cast<std::size_t>(u) + 1 && similar(profile.back())) {
        sim.arcs.push_back({i, j, profile.back()});
      }
    }
  }
  return sim;
}

/// Matching maximizing the summed similarity; ties go to the
/// lexicographically smallest (left, right) arc sequence.
inline std::vector<SimArc> max_weight_matching(const SimGraph& sim) {
  auto arcs = sim.arcs;
  std::sort(arcs.begin(), arcs.end(), [&](const SimArc& a, const SimArc& b) {
    return std::tie(sim.left[a.left].name, sim.right[a.right].name) <
           std::tie(sim.left[b.left].name, sim.right[b.right].name);
  });
  std::vector<matching::WeightedArc> weighted;
  for (const auto& a : arcs) weighted.push_back({a.left, a.right, boost::rational_cast<double>(a.weight)});
  std::vector<SimArc> out;
  for (auto k : matching::maximum_weight(sim.left.size(), sim.right.size(), weighted)) out.push_back(arcs[k]);
  return out;
}

struct MergePair {
  XComponent left;
  XComponent right;
  /// Matched complex pairs under which an attribute/simple-element pair was
  /// found; empty for complex pairs.
  std::vector<std::pair<std::string, std::string>> context;
};

struct MergeDictionary {
  Severity severity = 0;
  std::vector<MergePair> pairs;

  bool contains(const XComponent& a, const XComponent& b) const {
    return std::any_of(pairs.begin(), pairs.end(), [&](const MergePair& p) {
      return p.left.name == a.name && p.left.typology == a.typology && p.right.name == b.name &&
             p.right.typology == b.typology;
    });
  }
};

struct RenamePair {
  XComponent left;
  XComponent right;
};

struct RenameDictionary {
  std::vector<RenamePair> pairs;
};

/// Attributes and simple elements reachable from a complex element through
/// element refs and attribute uses.
inline std::vector<std::size_t> leaf_descendants(const SchemaModel& model, const std::string& complex_name) {
  std::set<std::size_t> leaves;
  std::set<std::string> visited;
  std::vector<std::string> stack{complex_name};
  while (!stack.empty()) {
    auto name = std::move(stack.back());
    stack.pop_back();
    if (!visited.insert(name).second) continue;
    const auto& content = model.content(name);
    for (const auto& a : content.attributes) leaves.insert(*model.index_of(a.target, Typology::Attribute));
    for (const auto& r : content.children) {
      const auto& child = *model.find_element(r.target);
      if (child.typology == Typology::ComplexElement) {
        stack.push_back(child.name);
      } else {
        leaves.insert(*model.index_of(child.name, Typology::SimpleElement));
      }
    }
  }
  return {leaves.begin(), leaves.end()};
}

namespace detail {

inline bool pair_order(const MergePair& a, const MergePair& b) {
  return std::tie(a.left.name, a.left.typology, a.right.name, a.right.typology) <
         std::tie(b.left.name, b.left.typology, b.right.name, b.right.typology);
}

}  // namespace detail

/// Matched complex pairs, then attribute/simple-element pairs below matched
/// parents that are (i) thesaurus-synonymous with compatible types or (ii)
/// same-named, same-typology with compatible types. Candidate conflicts are
/// resolved by a maximum-cardinality matching preferring exact names.
inline MergeDictionary build_md(const SchemaModel& s1, const SchemaModel& s2, Severity u, const XsGraph& g1,
                                const XsGraph& g2, const Thesaurus& t) {
  MergeDictionary md;
  md.severity = u;
  auto sim = build_simg(g1, g2, u, t);
  auto complex_pairs = max_weight_matching(sim);

  struct Candidate {
    std::size_t left = 0;  // component index in s1
    std::size_t right = 0;
    bool same_name = false;
    bool same_typology = false;
    std::vector<std::pair<std::string, std::string>> context;
  };
  std::map<std::pair<std::size_t, std::size_t>, Candidate> candidates;

  for (const auto& arc : complex_pairs) {
    const auto& e1 = sim.left[arc.left];
    const auto& e2 = sim.right[arc.right];
    md.pairs.push_back({e1, e2, {}});
    const auto d1 = leaf_descendants(s1, e1.name);
    const auto d2 = leaf_descendants(s2, e2.name);
    for (auto i : d1) {
      const auto& x1 = s1.components()[i];
      for (auto j : d2) {
        const auto& x2 = s2.components()[j];
        if (!compatible_types(*x1.data_type, *x2.data_type)) continue;
        const bool same_name = iequals(x1.name, x2.name);
        const bool by_thesaurus = lexical_synonym(t, x1.name, x2.name);
        const bool by_name = same_name && x1.typology == x2.typology;
        if (!by_thesaurus && !by_name) continue;
        auto& c = candidates[{i, j}];
        c.left = i;
        c.right = j;
        c.same_name = same_name;
        c.same_typology = x1.typology == x2.typology;
        c.context.emplace_back(e1.name, e2.name);
      }
    }
  }

  std::vector<Candidate> ordered;
  for (auto& [key, c] : candidates) ordered.push_back(std::move(c));
  std::sort(ordered.begin(), ordered.end(), [&](const Candidate& a, const Candidate& b) {
    const auto &a1 = s1.components()[a.left], &a2 = s2.components()[a.right];
    const auto &b1 = s1.components()[b.left], &b2 = s2.components()[b.right];
    return std::tie(a1.name, a1.typology, a2.name, a2.typology) < std::tie(b1.name, b1.typology, b2.name, b2.typology);
  });
  // Cardinality first: the exact-name and same-typology bonuses summed over
  // any matching stay below one arc.
  const double bonus = 1.0 / (2.0 * static_cast<double>(ordered.size() + 1));
  std::vector<matching::WeightedArc> weighted;
  for (const auto& c : ordered) {
    weighted.push_back({c.left, c.right, 1.0 + (c.same_name ? bonus : 0.0) + (c.same_typology ? bonus : 0.0)});
  }
  for (auto k : matching::maximum_weight(s1.components().size(), s2.components().size(), weighted)) {
    auto& c = ordered[k];
    std::sort(c.context.begin(), c.context.end());
    md.pairs.push_back({s1.components()[c.left], s2.components()[c.right], std::move(c.context)});
  }
  std::sort(md.pairs.begin(), md.pairs.end(), detail::pair_order);
  return md;
}

/// Same-named element/element or attribute/attribute pairs not merged.
inline RenameDictionary build_rd(const SchemaModel& s1, const SchemaModel& s2, const MergeDictionary& md) {
  RenameDictionary rd;
  for (const auto& x1 : s1.components()) {
    for (const auto& x2 : s2.components()) {
      if (is_element(x1.typology) != is_element(x2.typology)) continue;
      if (!iequals(x1.name, x2.name) || md.contains(x1, x2)) continue;
      rd.pairs.push_back({x1, x2});
    }
  }
  std::sort(rd.pairs.begin(), rd.pairs.end(), [](const RenamePair& a, const RenamePair& b) {
    return std::tie(a.left.name, a.left.typology, a.right.name, a.right.typology) <
           std::tie(b.left.name, b.left.typology, b.right.name, b.right.typology);
  });
  return rd;
}

}  // namespace xsdmerge
