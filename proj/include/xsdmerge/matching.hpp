#pragma once

// Bipartite matching primitives: Hopcroft-Karp for maximum cardinality and
// Kuhn-Munkres for maximum weight with a deterministic tie-break.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace xsdmerge::matching {

inline constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

/// Maximum-cardinality matching. `adjacency[l]` lists right nodes of left
/// node l. Returns (left, right) pairs ordered by left index.
inline std::vector<std::pair<std::size_t, std::size_t>> maximum_cardinality(
    std::size_t n_right, const std::vector<std::vector<std::size_t>>& adjacency) {
  const std::size_t n_left = adjacency.size();
  std::vector<std::size_t> match_left(n_left, kFree), match_right(n_right, kFree);
  std::vector<std::size_t> dist(n_left);
  const std::size_t inf = std::numeric_limits<std::size_t>::max();

  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t l = 0; l < n_left; ++l) {
      if (match_left[l] == kFree) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = inf;
      }
    }
    while (!q.empty()) {
      auto l = q.front();
      q.pop();
      for (auto r : adjacency[l]) {
        auto next = match_right[r];
        if (next == kFree) {
          found = true;
        } else if (dist[next] == inf) {
          dist[next] = dist[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, std::size_t l) -> bool {
    for (auto r : adjacency[l]) {
      auto next = match_right[r];
      if (next == kFree || (dist[next] == dist[l] + 1 && self(self, next))) {
        match_left[l] = r;
        match_right[r] = l;
        return true;
      }
    }
    dist[l] = inf;
    return false;
  };

  while (bfs()) {
    for (std::size_t l = 0; l < n_left; ++l) {
      if (match_left[l] == kFree) dfs(dfs, l);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t l = 0; l < n_left; ++l) {
    if (match_left[l] != kFree) out.emplace_back(l, match_left[l]);
  }
  return out;
}

struct WeightedArc {
  std::size_t left = 0;
  std::size_t right = 0;
  double weight = 0.0;
};

/// Weights closer than this are treated as equal.
inline constexpr double kWeightEpsilon = 1e-9;

namespace detail {

/// Kuhn-Munkres on a square matrix, maximizing. Returns total weight and the
/// column assigned to each row.
inline std::pair<double, std::vector<std::size_t>> hungarian_max(const std::vector<std::vector<double>>& w) {
  const std::size_t n = w.size();
  if (n == 0) return {0.0, {}};
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = -w[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n, kFree);
  double total = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    if (p[j] != 0) {
      row_to_col[p[j] - 1] = j - 1;
      total += w[p[j] - 1][j - 1];
    }
  }
  return {total, row_to_col};
}

}  // namespace detail

/// Maximum-weight matching over positive-weight arcs. Among optimal
/// matchings, the one chosen greedily in the given arc order: each arc is
/// kept if some optimal matching containing it (and the arcs already kept)
/// exists, otherwise discarded. Returns indices into `arcs`, ascending.
inline std::vector<std::size_t> maximum_weight(std::size_t n_left, std::size_t n_right,
                                               const std::vector<WeightedArc>& arcs) {
  std::vector<bool> banned(arcs.size(), false), kept(arcs.size(), false);
  std::vector<bool> left_used(n_left, false), right_used(n_right, false);

  // Best matching over free nodes and non-banned arcs; returns arc indices.
  auto solve = [&](double& total) {
    std::vector<std::size_t> rows, cols;
    std::vector<std::size_t> row_of(n_left, kFree), col_of(n_right, kFree);
    for (std::size_t l = 0; l < n_left; ++l) {
      if (!left_used[l]) {
        row_of[l] = rows.size();
        rows.push_back(l);
      }
    }
    for (std::size_t r = 0; r < n_right; ++r) {
      if (!right_used[r]) {
        col_of[r] = cols.size();
        cols.push_back(r);
      }
    }
    const std::size_t n = std::max(rows.size(), cols.size());
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<std::size_t>> arc_at(n, std::vector<std::size_t>(n, kFree));
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const auto& arc = arcs[a];
      if (banned[a] || left_used[arc.left] || right_used[arc.right] || arc.weight <= 0.0) continue;
      auto i = row_of[arc.left], j = col_of[arc.right];
      if (arc_at[i][j] == kFree || arc.weight > w[i][j]) {
        w[i][j] = arc.weight;
        arc_at[i][j] = a;
      }
    }
    auto [sum, assignment] = detail::hungarian_max(w);
    total = sum;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < n; ++i) {
      auto j = assignment[i];
      if (j != kFree && arc_at[i][j] != kFree) chosen.push_back(arc_at[i][j]);
    }
    return chosen;
  };

  double fixed_total = 0.0;
  double remaining = 0.0;
  auto current = solve(remaining);
  const double optimum = remaining;

  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const auto& arc = arcs[a];
    if (banned[a] || left_used[arc.left] || right_used[arc.right] || arc.weight <= 0.0) {
      banned[a] = true;
      continue;
    }
    if (std::find(current.begin(), current.end(), a) == current.end()) {
      left_used[arc.left] = right_used[arc.right] = true;
      double rest = 0.0;
      auto trial = solve(rest);
      if (fixed_total + arc.weight + rest + kWeightEpsilon >= optimum) {
        current = std::move(trial);
        current.push_back(a);
      } else {
        left_used[arc.left] = right_used[arc.right] = false;
        banned[a] = true;
        continue;
      }
    } else {
      left_used[arc.left] = right_used[arc.right] = true;
    }
    kept[a] = true;
    fixed_total += arc.weight;
    current.erase(std::remove(current.begin(), current.end(), a), current.end());
  }

  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (kept[a]) out.push_back(a);
  }
  return out;
}

}  // namespace xsdmerge::matching
