#pragma once

// Fixture loading, random schema generation and independent oracles shared
// by the unit tests and the acceptance binary. Oracles here deliberately do
// not call the library code they check.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "xsdmerge/commands.hpp"
#include "xsdmerge/xsdmerge.hpp"

namespace xsdmerge::testing {

inline std::string fixture_path(const std::string& name) { return std::string(XSDMERGE_FIXTURES_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline SchemaModel load_fixture(const std::string& name, const std::string& id) {
  return parse_schema(read_fixture(name), id);
}

inline Thesaurus fixture_thesaurus() { return Thesaurus::parse(read_fixture("thesaurus.tsv")); }

struct WorkedExample {
  SchemaModel s1 = load_fixture("s1.xsd", "S1");
  SchemaModel s2 = load_fixture("s2.xsd", "S2");
  Thesaurus thesaurus = fixture_thesaurus();
  XsGraph g1 = build_xs_graph(s1, RefTargetMap{});
  XsGraph g2 = build_xs_graph(s2, RefTargetMap{});

  const XComponent& c1(const std::string& name) const { return s1.require(name, Typology::ComplexElement); }
  const XComponent& c2(const std::string& name) const { return s2.require(name, Typology::ComplexElement); }
};

inline std::set<std::string> names_of(const std::vector<XComponent>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(x.name);
  return out;
}

// ---------------------------------------------------------------------------
// Random referenced-style schemas.

struct RandomSchemaOptions {
  std::size_t max_components = 15;
  std::size_t name_pool = 20;  // names drawn from n0..n{pool-1}; shared pools create overlaps
  bool idrefs = true;          // allow ID/IDREF/IDREFS attributes
};

inline SchemaModel random_schema(std::mt19937& rng, const std::string& id, const RandomSchemaOptions& opt = {}) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };

  const std::size_t total = pick(2, opt.max_components);
  const std::size_t n_complex = pick(1, std::min<std::size_t>(5, total - 1));
  const std::size_t rest = total - n_complex;
  const std::size_t n_attr = pick(0, std::min<std::size_t>(4, rest));
  const std::size_t n_simple = rest - n_attr;

  std::vector<std::string> pool;
  for (std::size_t i = 0; i < std::max(opt.name_pool, total); ++i) pool.push_back("n" + std::to_string(i));
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::string> element_names(pool.begin(), pool.begin() + static_cast<long>(n_complex + n_simple));
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::string> attribute_names(pool.begin(), pool.begin() + static_cast<long>(n_attr));

  std::vector<std::string> types{"string", "int", "integer", "date", "decimal"};
  if (opt.idrefs) {
    types.push_back("ID");
    types.push_back("IDREF");
    types.push_back("IDREFS");
  }

  SchemaModel model(id);
  std::vector<std::string> complex(element_names.begin(), element_names.begin() + static_cast<long>(n_complex));
  std::vector<std::string> simple(element_names.begin() + static_cast<long>(n_complex), element_names.end());
  for (const auto& a : attribute_names) model.add({a, Typology::Attribute, types[pick(0, types.size() - 1)], id});
  for (const auto& s : simple) model.add({s, Typology::SimpleElement, types[pick(0, 4)], id});
  for (const auto& c : complex) model.add({c, Typology::ComplexElement, std::nullopt, id});

  auto random_ref = [&](const std::string& target) {
    ChildRef r{target, static_cast<std::uint32_t>(pick(0, 1)), 1};
    const auto m = pick(0, 2);
    r.max_occurs = m == 0 ? 1U : m == 1 ? std::max<std::uint32_t>(2, r.min_occurs) : kUnbounded;
    return r;
  };
  std::vector<std::set<std::string>> child_targets(n_complex);
  std::vector<std::set<std::string>> attr_targets(n_complex);
  // complex[0] is the root; every other complex hangs below an earlier one
  for (std::size_t i = 1; i < n_complex; ++i) child_targets[pick(0, i - 1)].insert(complex[i]);
  for (std::size_t i = 0; i < n_complex; ++i) {
    for (std::size_t j = 1; j < n_complex; ++j) {
      if (j != i && coin(0.15)) child_targets[i].insert(complex[j]);
    }
  }
  for (const auto& s : simple) {
    child_targets[pick(0, n_complex - 1)].insert(s);
    for (std::size_t i = 0; i < n_complex; ++i) {
      if (coin(0.15)) child_targets[i].insert(s);
    }
  }
  for (const auto& a : attribute_names) {
    attr_targets[pick(0, n_complex - 1)].insert(a);
    for (std::size_t i = 0; i < n_complex; ++i) {
      if (coin(0.15)) attr_targets[i].insert(a);
    }
  }
  for (std::size_t i = 0; i < n_complex; ++i) {
    auto& content = model.content(complex[i]);
    content.compositor = coin(0.2) ? Compositor::All : Compositor::Sequence;
    std::vector<std::string> order(child_targets[i].begin(), child_targets[i].end());
    std::shuffle(order.begin(), order.end(), rng);
    for (const auto& t : order) {
      auto r = random_ref(t);
      if (content.compositor == Compositor::All) r.max_occurs = 1;
      content.children.push_back(r);
    }
    for (const auto& a : attr_targets[i]) content.attributes.push_back({a, coin(0.5)});
  }
  check_invariants(model, ErrorCode::ParseError);
  return model;
}

/// Random IDREF evidence: each IDREF/IDREFS attribute points at up to two
/// complex elements.
inline RefTargetMap random_refs(std::mt19937& rng, const SchemaModel& model) {
  RefTargetMap refs;
  std::vector<std::string> complex;
  for (const auto& c : model.components()) {
    if (c.typology == Typology::ComplexElement) complex.push_back(c.name);
  }
  for (const auto& c : model.components()) {
    if (c.typology != Typology::Attribute || !is_idref_type(c.data_type)) continue;
    const auto k = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    for (std::size_t i = 0; i < k; ++i) {
      refs.targets[c.name].insert(complex[std::uniform_int_distribution<std::size_t>(0, complex.size() - 1)(rng)]);
    }
  }
  return refs;
}

inline Thesaurus random_thesaurus(std::mt19937& rng, std::size_t pool, std::size_t pairs) {
  Thesaurus t;
  std::uniform_int_distribution<std::size_t> d(0, pool - 1);
  for (std::size_t i = 0; i < pairs; ++i) t.add("n" + std::to_string(d(rng)), "n" + std::to_string(d(rng)));
  return t;
}

// ---------------------------------------------------------------------------
// Oracle: XS-graph arcs re-derived from the content model, and connection
// costs as the minimum over exhaustively enumerated simple paths.

struct OracleGraph {
  std::vector<XComponent> nodes;
  std::map<std::pair<std::size_t, std::size_t>, unsigned> arc_cost;  // (from, to) -> 0 or 1
};

inline OracleGraph oracle_graph(const SchemaModel& model, const RefTargetMap& refs) {
  OracleGraph g;
  g.nodes = model.components();
  auto index = [&](const std::string& name, bool element) {
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      if (g.nodes[i].name == name && is_element(g.nodes[i].typology) == element) return i;
    }
    return std::numeric_limits<std::size_t>::max();
  };
  auto put = [&](std::size_t a, std::size_t b, unsigned cost) {
    if (a == b) return;
    auto [it, fresh] = g.arc_cost.emplace(std::make_pair(a, b), cost);
    if (!fresh) it->second = std::min(it->second, cost);
  };
  for (const auto& [name, content] : model.contents()) {
    const auto from = index(name, true);
    for (const auto& r : content.children) {
      const auto to = index(r.target, true);
      put(from, to, g.nodes[to].typology == Typology::ComplexElement ? 1U : 0U);
    }
    for (const auto& a : content.attributes) {
      put(from, index(a.target, false), 0U);
      if (const auto it = refs.targets.find(a.target); it != refs.targets.end()) {
        for (const auto& t : it->second) put(from, index(t, true), 1U);
      }
    }
  }
  return g;
}

/// Minimum path cost by enumerating every simple path; UINT32_MAX if none.
inline std::uint32_t oracle_cost(const OracleGraph& g, std::size_t from, std::size_t to) {
  if (from == to) return 0;
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::vector<bool> on_path(g.nodes.size(), false);
  std::function<void(std::size_t, std::uint32_t)> walk = [&](std::size_t at, std::uint32_t cost) {
    if (at == to) {
      best = std::min(best, cost);
      return;
    }
    on_path[at] = true;
    for (const auto& [arc, c] : g.arc_cost) {
      if (arc.first == at && !on_path[arc.second]) walk(arc.second, cost + c);
    }
    on_path[at] = false;
  };
  walk(from, 0);
  return best;
}

// ---------------------------------------------------------------------------
// Oracle: brute-force bipartite matchings.

/// Largest matching size by trying every injective assignment of lefts.
inline std::size_t brute_force_cardinality(std::size_t n_left, std::size_t n_right,
                                           const std::vector<std::vector<std::size_t>>& adjacency) {
  std::size_t best = 0;
  std::vector<bool> used(n_right, false);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t l, std::size_t size) {
    if (l == n_left) {
      best = std::max(best, size);
      return;
    }
    go(l + 1, size);
    for (auto r : adjacency[l]) {
      if (used[r]) continue;
      used[r] = true;
      go(l + 1, size + 1);
      used[r] = false;
    }
  };
  go(0, 0);
  return best;
}

/// Heaviest total over all matchings of the given arcs.
inline double brute_force_max_weight(std::size_t n_left, std::size_t n_right,
                                     const std::vector<matching::WeightedArc>& arcs) {
  double best = 0.0;
  std::vector<bool> used_l(n_left, false), used_r(n_right, false);
  std::function<void(std::size_t, double)> go = [&](std::size_t a, double total) {
    if (a == arcs.size()) {
      best = std::max(best, total);
      return;
    }
    go(a + 1, total);
    const auto& arc = arcs[a];
    if (used_l[arc.left] || used_r[arc.right]) return;
    used_l[arc.left] = used_r[arc.right] = true;
    go(a + 1, total + arc.weight);
    used_l[arc.left] = used_r[arc.right] = false;
  };
  go(0, 0.0);
  return best;
}

/// Oracle phi: 2|A'|/(|P|+|Q|) with |A'| from the brute-force matcher and
/// name relatedness checked case-insensitively against the thesaurus.
inline std::pair<std::int64_t, std::int64_t> oracle_phi(const std::vector<XComponent>& p,
                                                        const std::vector<XComponent>& q, const Thesaurus& t) {
  std::vector<std::vector<std::size_t>> adjacency(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (lowercase(p[i].name) == lowercase(q[j].name) || t.related(p[i].name, q[j].name)) adjacency[i].push_back(j);
    }
  }
  const auto m = brute_force_cardinality(p.size(), q.size(), adjacency);
  return {static_cast<std::int64_t>(2 * m), static_cast<std::int64_t>(p.size() + q.size())};
}

}  // namespace xsdmerge::testing
