#pragma once

// Synonymies and homonymies between the components of two schemas, decided
// by comparing neighborhoods at every level up to the requested severity.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include <boost/rational.hpp>

#include "xsdmerge/error.hpp"
#include "xsdmerge/matching.hpp"
#include "xsdmerge/names.hpp"
#include "xsdmerge/thesaurus.hpp"
#include "xsdmerge/xs_graph.hpp"

namespace xsdmerge {

using Rational = boost::rational<std::int64_t>;
using Severity = std::uint32_t;

/// Name-synonymy graph between two neighborhoods. Arcs are (left, right)
/// index pairs.
struct BipartiteGraph {
  std::vector<XComponent> left;
  std::vector<XComponent> right;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

inline BipartiteGraph build_bipartite(std::span<const XComponent> left, std::span<const XComponent> right,
                                      const Thesaurus& t) {
  BipartiteGraph bg{{left.begin(), left.end()}, {right.begin(), right.end()}, {}};
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (lexical_synonym(t, left[i].name, right[j].name)) bg.arcs.emplace_back(i, j);
    }
  }
  return bg;
}

/// Size of a maximum matching of the graph.
inline std::size_t matching_size(const BipartiteGraph& bg) {
  std::vector<std::vector<std::size_t>> adjacency(bg.left.size());
  for (auto [l, r] : bg.arcs) adjacency[l].push_back(r);
  return matching::maximum_cardinality(bg.right.size(), adjacency).size();
}

/// 2|A'| / (|P| + |Q|) for a maximum matching A' of the name-synonymy graph.
inline Rational phi(std::span<const XComponent> left, std::span<const XComponent> right, const Thesaurus& t) {
  if (left.empty() || right.empty()) throw Error(ErrorCode::EmptyNeighborhood, "phi needs two non-empty sets");
  auto bg = build_bipartite(left, right, t);
  return Rational(2 * static_cast<std::int64_t>(matching_size(bg)),
                  static_cast<std::int64_t>(left.size() + right.size()));
}

inline bool similar(const Rational& value) { return value > Rational(1, 2); }

/// m - 1 where m is the larger complex-element count (never below 0).
inline Severity max_severity(std::size_t complex_left, std::size_t complex_right) {
  auto m = std::max(complex_left, complex_right);
  return m == 0 ? 0 : static_cast<Severity>(m - 1);
}

inline Severity max_severity(const SchemaModel& s1, const SchemaModel& s2) {
  return max_severity(s1.count(Typology::ComplexElement), s2.count(Typology::ComplexElement));
}

inline Severity max_severity(const XsGraph& g1, const XsGraph& g2) {
  return max_severity(g1.complex_count(), g2.complex_count());
}

inline void check_severity(Severity u, const XsGraph& g1, const XsGraph& g2) {
  if (auto bound = max_severity(g1, g2); u > bound) {
    throw Error(ErrorCode::SeverityOutOfRange,
                "severity " + std::to_string(u) + " exceeds the maximum " + std::to_string(bound));
  }
}

/// phi of the level-v neighborhoods for v = 0, 1, ... stopping after the
/// first dissimilar level or after level u.
inline std::vector<Rational> phi_profile(const XComponent& x1, const XComponent& x2, Severity u, const XsGraph& g1,
                                         const XsGraph& g2, const Thesaurus& t) {
  check_severity(u, g1, g2);
  const auto i1 = g1.index_of(x1);
  const auto i2 = g2.index_of(x2);
  std::vector<Rational> profile;
  for (Severity v = 0; v <= u; ++v) {
    std::vector<XComponent> n1, n2;
    for (auto i : g1.within(i1, v)) n1.push_back(g1.nodes()[i]);
    for (auto i : g2.within(i2, v)) n2.push_back(g2.nodes()[i]);
    profile.push_back(phi(n1, n2, t));
    if (!similar(profile.back())) break;
  }
  return profile;
}

inline bool synonymous(const XComponent& x1, const XComponent& x2, Severity u, const XsGraph& g1, const XsGraph& g2,
                       const Thesaurus& t) {
  auto profile = phi_profile(x1, x2, u, g1, g2, t);
  return profile.size() == static_cast<std::size_t>(u) + 1 && similar(profile.back());
}

inline bool homonymous(const XComponent& x1, const XComponent& x2, Severity u, const XsGraph& g1, const XsGraph& g2,
                       const Thesaurus& t) {
  const bool not_synonymous = !synonymous(x1, x2, u, g1, g2, t);
  return iequals(x1.name, x2.name) && not_synonymous;
}

struct Synonymy {
  XComponent left;
  XComponent right;
  std::vector<Rational> phi;  // levels 0..u
};

struct Homonymy {
  XComponent left;
  XComponent right;
};

struct PropertySet {
  Severity severity = 0;
  std::vector<Synonymy> synonymies;
  std::vector<Homonymy> homonymies;
};

/// Complex x complex pairs, plus attribute/simple-element pairs whose names
/// are lexically synonymous. Output is ordered by (left, right).
inline PropertySet extract_properties(const XsGraph& g1, const XsGraph& g2, Severity u, const Thesaurus& t) {
  check_severity(u, g1, g2);
  auto sorted = [](const XsGraph& g) {
    auto nodes = g.nodes();
    std::sort(nodes.begin(), nodes.end(), ComponentOrder{});
    return nodes;
  };
  const auto left = sorted(g1);
  const auto right = sorted(g2);

  PropertySet props;
  props.severity = u;
  for (const auto& x1 : left) {
    for (const auto& x2 : right) {
      const bool complex1 = x1.typology == Typology::ComplexElement;
      const bool complex2 = x2.typology == Typology::ComplexElement;
      if (complex1 != complex2) continue;
      if (!complex1 && !lexical_synonym(t, x1.name, x2.name)) continue;
      auto profile = phi_profile(x1, x2, u, g1, g2, t);
      if (profile.size() == static_cast<std::size_t>(u) + 1 && similar(profile.back())) {
        props.synonymies.push_back({x1, x2, std::move(profile)});
      } else if (iequals(x1.name, x2.name)) {
        props.homonymies.push_back({x1, x2});
      }
    }
  }
  return props;
}

}  // namespace xsdmerge
