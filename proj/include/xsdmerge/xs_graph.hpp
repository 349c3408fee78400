#pragma once

// XS-Graph: one node per x-component, an arc for every near pair costing 0
// (very close) or 1 (close). Connection costs are shortest 0/1 paths.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xsdmerge/error.hpp"
#include "xsdmerge/instance_reader.hpp"
#include "xsdmerge/schema_model.hpp"

namespace xsdmerge {

enum class Proximity { VeryClose, Close, Reachable, Unreachable };

inline std::string_view to_string(Proximity p) {
  switch (p) {
    case Proximity::VeryClose: return "VeryClose";
    case Proximity::Close: return "Close";
    case Proximity::Reachable: return "Reachable";
    case Proximity::Unreachable: return "Unreachable";
  }
  return "?";
}

using Cost = std::uint32_t;
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max();

struct Arc {
  std::size_t source = 0;
  std::size_t target = 0;
  Cost cost = 0;
};

namespace detail {

/// Near successors of component `index` (self excluded), with arc cost.
inline std::vector<std::pair<std::size_t, Cost>> near_successors(const SchemaModel& model, const RefTargetMap& refs,
                                                                 std::size_t index) {
  std::vector<std::pair<std::size_t, Cost>> out;
  const auto& c = model.components()[index];
  if (c.typology != Typology::ComplexElement) return out;
  const auto& content = model.content(c.name);
  std::map<std::size_t, Cost> best;
  auto note = [&](std::size_t t, Cost cost) {
    if (t == index) return;
    auto [it, inserted] = best.emplace(t, cost);
    if (!inserted) it->second = std::min(it->second, cost);
  };
  for (const auto& use : content.attributes) {
    note(*model.index_of(use.target, Typology::Attribute), 0);
    const auto& attr = *model.find_attribute(use.target);
    if (!is_idref_type(attr.data_type)) continue;
    if (const auto* targets = refs.targets_of(attr.name)) {
      for (const auto& name : *targets) {
        if (auto t = model.index_of(name, Typology::ComplexElement)) note(*t, 1);
      }
    }
  }
  for (const auto& r : content.children) {
    const auto& child = *model.find_element(r.target);
    note(*model.index_of(child.name, child.typology), child.typology == Typology::SimpleElement ? 0 : 1);
  }
  out.assign(best.begin(), best.end());
  return out;
}

inline std::size_t index_in(const SchemaModel& model, const XComponent& x) {
  if (auto i = model.index_of(x.name, x.typology)) return *i;
  throw Error(ErrorCode::UnknownComponent,
              "'" + x.name + "' [" + std::string(to_string(x.typology)) + "] is not in schema '" + model.schema_id() +
                  "'");
}

}  // namespace detail

/// Evaluates the proximity predicates directly on the schema.
inline Proximity proximity(const SchemaModel& model, const RefTargetMap& refs, const XComponent& source,
                           const XComponent& target) {
  const auto s = detail::index_in(model, source);
  const auto t = detail::index_in(model, target);
  if (s == t) return Proximity::VeryClose;
  for (auto [next, cost] : detail::near_successors(model, refs, s)) {
    if (next == t) return cost == 0 ? Proximity::VeryClose : Proximity::Close;
  }
  std::vector<bool> seen(model.components().size(), false);
  std::vector<std::size_t> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto [v, cost] : detail::near_successors(model, refs, u)) {
      if (v == t) return Proximity::Reachable;
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return Proximity::Unreachable;
}

class XsGraph {
 public:
  const std::vector<XComponent>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::string& schema_id() const { return schema_id_; }

  std::size_t index_of(const XComponent& x) const {
    auto it = index_.find({is_element(x.typology), x.name});
    if (it == index_.end() || nodes_[it->second].typology != x.typology) {
      throw Error(ErrorCode::UnknownComponent, "'" + x.name + "' [" + std::string(to_string(x.typology)) +
                                                   "] is not a node of the graph of '" + schema_id_ + "'");
    }
    return it->second;
  }

  Cost cost(std::size_t from, std::size_t to) const { return costs_[from * nodes_.size() + to]; }

  std::size_t complex_count() const {
    return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const auto& c) {
      return c.typology == Typology::ComplexElement;
    }));
  }

  /// Node indices within cost `limit` of `from`, ordered by (name, typology).
  std::vector<std::size_t> within(std::size_t from, Cost limit) const {
    std::vector<std::size_t> out;
    for (std::size_t t : order_) {
      if (cost(from, t) <= limit) out.push_back(t);
    }
    return out;
  }

 private:
  friend XsGraph build_xs_graph(const SchemaModel&, const RefTargetMap&);

  std::string schema_id_;
  std::vector<XComponent> nodes_;
  std::vector<Arc> arcs_;
  std::map<std::pair<bool, std::string>, std::size_t> index_;
  std::vector<std::size_t> order_;
  std::vector<Cost> costs_;  // row-major all-pairs connection costs
};

inline XsGraph build_xs_graph(const SchemaModel& model, const RefTargetMap& refs) {
  XsGraph g;
  g.schema_id_ = model.schema_id();
  g.nodes_ = model.components();
  const auto n = g.nodes_.size();
  for (std::size_t i = 0; i < n; ++i) g.index_[{is_element(g.nodes_[i].typology), g.nodes_[i].name}] = i;
  g.order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.order_[i] = i;
  std::sort(g.order_.begin(), g.order_.end(),
            [&](std::size_t a, std::size_t b) { return ComponentOrder{}(g.nodes_[a], g.nodes_[b]); });

  std::vector<std::vector<std::pair<std::size_t, Cost>>> adjacency(n);
  for (std::size_t i = 0; i < n; ++i) {
    adjacency[i] = detail::near_successors(model, refs, i);
    for (auto [t, c] : adjacency[i]) g.arcs_.push_back({i, t, c});
  }
  std::sort(g.arcs_.begin(), g.arcs_.end(), [&](const Arc& a, const Arc& b) {
    ComponentOrder less;
    const auto &as = g.nodes_[a.source], &bs = g.nodes_[b.source];
    if (less(as, bs) || less(bs, as)) return less(as, bs);
    return less(g.nodes_[a.target], g.nodes_[b.target]);
  });

  // 0/1 breadth-first search from every source.
  g.costs_.assign(n * n, kInfiniteCost);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    Cost* row = &g.costs_[s * n];
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto [v, c] : adjacency[u]) {
        if (row[u] + c < row[v]) {
          row[v] = row[u] + c;
          if (c == 0) {
            queue.push_front(v);
          } else {
            queue.push_back(v);
          }
        }
      }
    }
  }
  return g;
}

inline Cost connection_cost(const XsGraph& g, const XComponent& source, const XComponent& target) {
  return g.cost(g.index_of(source), g.index_of(target));
}

/// Components within connection cost `j` of `x`, ordered by name.
inline std::vector<XComponent> neighborhood(const XsGraph& g, const XComponent& x, Cost j) {
  std::vector<XComponent> out;
  for (auto i : g.within(g.index_of(x), j)) out.push_back(g.nodes()[i]);
  return out;
}

}  // namespace xsdmerge
